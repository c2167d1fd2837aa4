#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symchar/numeric.hpp"

namespace symchar {

// 1-based cell coordinates of a Young diagram, matching the usual (i,j)
// row/column conventions.
struct Node {
    int row = 0;
    int col = 0;
    bool operator==(const Node&) const = default;
    bool operator<(const Node& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

struct PartMultiplicity {
    int value = 0; // distinct part value
    int count = 0; // how many times it occurs
    bool operator==(const PartMultiplicity&) const = default;
};
// Distinct part values in strictly decreasing order, all counts positive.
using MultiplicityForm = std::vector<PartMultiplicity>;

/// An integer partition in canonical form: parts weakly decreasing, all
/// positive, with the total cached. The empty partition is the unique
/// partition of 0. Immutable after construction; freely shareable.
///
/// Structural limit: n <= 10^6 (kMaxN). Values derived from partitions
/// (degrees, centralizer orders, ...) use arbitrary precision instead.
class Partition {
public:
    static constexpr long long kMaxN = 1'000'000;

    Partition() = default;
    explicit Partition(std::vector<int> parts); // sorts, validates

    // Text grammar: comma-separated "v" or "v^k" tokens, whitespace ignored.
    // Throws std::invalid_argument naming the offending token.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool is_self_conjugate() const;
    MultiplicityForm multiplicity_form() const;

    // Canonical exponent-compressed form, e.g. "13,5,2^3,1^8"; "" for the
    // empty partition. Re-parses to an equal value.
    std::string str() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class Parity { Even, Odd };

// Parity of a permutation of cycle type beta: odd iff sum(beta_i - 1) is odd.
Parity parity(const Partition& beta);

// z_beta = prod_v v^{t_v} t_v! over distinct part values v with multiplicity
// t_v; the order of the centralizer of an element of cycle type beta.
Integer centralizer_size(const Partition& beta);

struct LcmFactored {
    Integer value;
    Factorization factors;
};
// lcm of all parts with its prime factorization; domain_error on the empty
// partition.
LcmFactored lcm_of_parts(const Partition& beta);

// All partitions of n exactly once, in reverse lexicographic order:
// (n) first, (1^n) last. partitions_of(0) yields the empty partition.
std::vector<Partition> partitions_of(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> self_conjugate_partitions_of(int n);

} // namespace symchar
