#pragma once

#include <array>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symchar/hooks.hpp"
#include "symchar/numeric.hpp"
#include "symchar/partition.hpp"

namespace symchar {

// Memo key: sub-partition being evaluated plus the still-unconsumed class
// parts, both canonical. Encoded as one flat vector with a -1 separator.
struct MNKey {
    std::vector<int> data;
    bool operator==(const MNKey&) const = default;
};

struct MNKeyHash {
    std::size_t operator()(const MNKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : k.data) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

MNKey make_mn_key(const std::vector<int>& alpha_parts,
                  const std::vector<int>& beta_rest);

/// Sharded memo cache for Murnaghan-Nakayama values. Values are pure
/// functions of their key, so duplicate concurrent computation of the same
/// key is benign; readers and writers only contend on a shard mutex.
///
/// Optional on-disk persistence: a versioned header followed by append-only
/// records "alpha|beta value". A cache that fails to parse is discarded
/// wholesale, never trusted.
class MemoCache {
public:
    MemoCache() = default;
    // max_entries = 0 means unbounded. When the cap is hit a full shard is
    // dropped; recomputation is pure, so eviction never changes results.
    explicit MemoCache(std::size_t max_entries) : max_entries_(max_entries) {}

    std::optional<Integer> find(const MNKey& key) const;
    void insert(const MNKey& key, const Integer& value);
    std::size_t size() const;

    // Returns the number of records loaded; 0 if the file is missing,
    // has a bad header, or any record is corrupt (discarded entirely).
    std::size_t load_file(const std::string& path);
    // Appends records not already present in the file (creates it, header
    // included, when needed). Returns the number of records written.
    std::size_t append_file(const std::string& path) const;

    static constexpr const char* kFileHeader = "symchar-memo-v1";

private:
    struct Entry {
        Integer value;
        bool persisted = false;
    };
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<MNKey, Entry, MNKeyHash> map;
    };
    static constexpr std::size_t kShards = 16;
    Shard& shard_for(const MNKey& key);
    const Shard& shard_for(const MNKey& key) const;

    std::size_t max_entries_ = 0;
    mutable std::array<Shard, kShards> shards_;
};

// Exact value of the irreducible character chi^alpha at the class beta via
// the Murnaghan-Nakayama recursion (largest remaining part consumed first,
// memoized). Throws std::domain_error when |alpha| != |beta|.
Integer mn_value(const Partition& alpha, const Partition& beta, MemoCache& cache);
Integer mn_value(const Partition& alpha, const Partition& beta); // local cache

// Degree of chi^alpha by the hook length formula n! / prod h(i,j); the
// division is asserted remainder-free.
Integer degree(const Partition& alpha);

// One legal run of the staged removal process: remove a hook of length
// prefix[0], then prefix[1] from what remains, and so on.
struct RemovalSequence {
    std::vector<Node> nodes;
    Partition result;
    int sign = 1; // product of (-1)^leg over the removals
};

// All legal removal sequences for the given prefix of class parts, in
// deterministic DFS order. Empty when no staged removal is possible.
std::vector<RemovalSequence> removal_sequences(const Partition& alpha,
                                               const std::vector<int>& prefix);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> characters;          // rows, reverse-lex: (n) first
    std::vector<Partition> classes;             // columns, (1^n) first
    std::vector<Integer> centralizers;          // per class
    std::vector<std::vector<Integer>> values;   // [row][column]
};

// Full p(n) x p(n) table; columns may be evaluated in parallel (jobs > 1),
// output is independent of the schedule.
CharacterTable character_table(int n, MemoCache& cache, int jobs = 1);

// Header row = classes, one row per character; partition labels are quoted
// (they contain commas), values are exact decimals.
std::string table_csv(const CharacterTable& table);
// {n, classes:[...], characters:[{partition, values:[decimal strings]}]}
std::string table_json(const CharacterTable& table);

} // namespace symchar
