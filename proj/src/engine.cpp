#include "symchar/engine.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "symchar/common.hpp"

namespace symchar {

MNKey make_mn_key(const std::vector<int>& alpha_parts,
                  const std::vector<int>& beta_rest) {
    MNKey key;
    key.data.reserve(alpha_parts.size() + beta_rest.size() + 1);
    key.data.insert(key.data.end(), alpha_parts.begin(), alpha_parts.end());
    key.data.push_back(-1);
    key.data.insert(key.data.end(), beta_rest.begin(), beta_rest.end());
    return key;
}

MemoCache::Shard& MemoCache::shard_for(const MNKey& key) {
    return shards_[MNKeyHash{}(key) % kShards];
}
const MemoCache::Shard& MemoCache::shard_for(const MNKey& key) const {
    return shards_[MNKeyHash{}(key) % kShards];
}

std::optional<Integer> MemoCache::find(const MNKey& key) const {
    const Shard& shard = shard_for(key);
    std::lock_guard<std::mutex> lock(shard.mu);
    auto it = shard.map.find(key);
    if (it == shard.map.end()) return std::nullopt;
    return it->second.value;
}

void MemoCache::insert(const MNKey& key, const Integer& value) {
    Shard& shard = shard_for(key);
    std::lock_guard<std::mutex> lock(shard.mu);
    if (max_entries_ > 0 && shard.map.size() >= max_entries_ / kShards + 1)
        shard.map.clear();
    shard.map.emplace(key, Entry{value, false});
}

std::size_t MemoCache::size() const {
    std::size_t total = 0;
    for (const Shard& shard : shards_) {
        std::lock_guard<std::mutex> lock(shard.mu);
        total += shard.map.size();
    }
    return total;
}

namespace {

std::string key_to_record(const MNKey& key) {
    // "<alpha>|<beta>" in canonical compressed text
    auto sep = std::find(key.data.begin(), key.data.end(), -1);
    Partition alpha(std::vector<int>(key.data.begin(), sep));
    Partition beta(std::vector<int>(std::next(sep), key.data.end()));
    return alpha.str() + "|" + beta.str();
}

bool record_to_key(const std::string& text, MNKey& out) {
    auto bar = text.find('|');
    if (bar == std::string::npos) return false;
    try {
        Partition alpha = Partition::parse(text.substr(0, bar));
        Partition beta = Partition::parse(text.substr(bar + 1));
        out = make_mn_key(alpha.parts(), beta.parts());
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_decimal(const std::string& text, Integer& out) {
    if (text.empty()) return false;
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = Integer(text);
    return true;
}

} // namespace

std::size_t MemoCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::string line;
    if (!std::getline(in, line) || line != kFileHeader) return 0;

    std::vector<std::pair<MNKey, Integer>> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto space = line.find(' ');
        MNKey key;
        Integer value;
        if (space == std::string::npos || !record_to_key(line.substr(0, space), key) ||
            !parse_decimal(line.substr(space + 1), value))
            return 0; // corrupt cache: discard everything
        records.emplace_back(std::move(key), std::move(value));
    }
    for (auto& [key, value] : records) {
        Shard& shard = shard_for(key);
        std::lock_guard<std::mutex> lock(shard.mu);
        shard.map[key] = Entry{std::move(value), true};
    }
    return records.size();
}

std::size_t MemoCache::append_file(const std::string& path) const {
    bool fresh = false;
    {
        std::ifstream probe(path);
        std::string header;
        fresh = !probe || !std::getline(probe, header) || header != std::string(kFileHeader);
    }
    std::ofstream out(path, fresh ? std::ios::trunc : std::ios::app);
    if (!out) return 0;
    if (fresh) out << kFileHeader << "\n";

    std::size_t written = 0;
    for (Shard& shard : shards_) {
        std::lock_guard<std::mutex> lock(shard.mu);
        for (auto& [key, entry] : shard.map) {
            if (entry.persisted) continue;
            out << key_to_record(key) << ' ' << entry.value.str() << "\n";
            entry.persisted = true;
            ++written;
        }
    }
    return written;
}

namespace {

Integer mn_recurse(const std::vector<int>& alpha, const std::vector<int>& beta_rest,
                   std::size_t beta_pos, MemoCache& cache) {
    if (beta_pos == beta_rest.size()) return 1; // both diagrams exhausted
    internal_check(!alpha.empty(), "MN recursion: class parts left but diagram empty");

    int k = beta_rest[beta_pos];
    // Largest hook of alpha; a longer part can never be removed.
    if (k > alpha.front() + static_cast<int>(alpha.size()) - 1) return 0;

    std::vector<int> rest(beta_rest.begin() + static_cast<long>(beta_pos),
                          beta_rest.end());
    MNKey key = make_mn_key(alpha, rest);
    if (auto hit = cache.find(key)) return *hit;

    Partition current{std::vector<int>(alpha)};
    Integer sum = 0;
    for (Node node : hooks_of_length(current, k)) {
        RimRemoval removal = remove_rim_hook(current, node);
        Integer sub = mn_recurse(removal.remaining.parts(), beta_rest, beta_pos + 1, cache);
        if (removal.leg % 2 == 0) sum += sub;
        else sum -= sub;
    }
    cache.insert(key, sum);
    return sum;
}

} // namespace

Integer mn_value(const Partition& alpha, const Partition& beta, MemoCache& cache) {
    if (alpha.n() != beta.n())
        throw std::domain_error("mn_value: |alpha| != |beta|");
    return mn_recurse(alpha.parts(), beta.parts(), 0, cache);
}

Integer mn_value(const Partition& alpha, const Partition& beta) {
    MemoCache cache;
    return mn_value(alpha, beta, cache);
}

Integer degree(const Partition& alpha) {
    HookGrid grid(alpha);
    Integer hooks = 1;
    for (int h : grid.hook_multiset()) hooks *= h;
    Integer num = factorial(alpha.n());
    internal_check(num % hooks == 0,
                   "hook length formula: division must be remainder-free");
    return num / hooks;
}

std::vector<RemovalSequence> removal_sequences(const Partition& alpha,
                                               const std::vector<int>& prefix) {
    for (int part : prefix)
        if (part < 1) throw std::domain_error("removal_sequences: parts must be positive");

    std::vector<RemovalSequence> out;
    std::vector<Node> nodes;
    int sign = 1;
    auto rec = [&](auto&& self, const Partition& current, std::size_t stage) -> void {
        if (stage == prefix.size()) {
            out.push_back({nodes, current, sign});
            return;
        }
        for (Node node : hooks_of_length(current, prefix[stage])) {
            RimRemoval removal = remove_rim_hook(current, node);
            nodes.push_back(node);
            int old_sign = sign;
            if (removal.leg % 2 != 0) sign = -sign;
            self(self, removal.remaining, stage + 1);
            sign = old_sign;
            nodes.pop_back();
        }
    };
    rec(rec, alpha, 0);
    return out;
}

CharacterTable character_table(int n, MemoCache& cache, int jobs) {
    if (n < 0) throw std::domain_error("character_table: negative n");
    CharacterTable table;
    table.n = n;
    table.characters = partitions_of(n);
    table.classes = table.characters;
    std::reverse(table.classes.begin(), table.classes.end()); // (1^n) first

    const std::size_t rows = table.characters.size();
    const std::size_t cols = table.classes.size();
    table.centralizers.resize(cols);
    for (std::size_t j = 0; j < cols; ++j)
        table.centralizers[j] = centralizer_size(table.classes[j]);
    table.values.assign(rows, std::vector<Integer>(cols));

    auto fill_column = [&](std::size_t j) {
        for (std::size_t i = 0; i < rows; ++i)
            table.values[i][j] = mn_value(table.characters[i], table.classes[j], cache);
    };

    if (jobs <= 1) {
        for (std::size_t j = 0; j < cols; ++j) fill_column(j);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w]() {
                for (std::size_t j = static_cast<std::size_t>(w); j < cols;
                     j += static_cast<std::size_t>(jobs))
                    fill_column(j);
            });
        for (auto& worker : workers) worker.join();
    }
    return table;
}

std::string table_csv(const CharacterTable& table) {
    std::ostringstream out;
    out << "alpha";
    for (const Partition& cls : table.classes) out << ",\"" << cls.str() << "\"";
    out << "\n";
    for (std::size_t i = 0; i < table.characters.size(); ++i) {
        out << "\"" << table.characters[i].str() << "\"";
        for (const Integer& v : table.values[i]) out << "," << v.str();
        out << "\n";
    }
    return out.str();
}

std::string table_json(const CharacterTable& table) {
    nlohmann::ordered_json doc;
    doc["n"] = table.n;
    auto classes = nlohmann::ordered_json::array();
    for (const Partition& cls : table.classes) classes.push_back(cls.str());
    doc["classes"] = std::move(classes);
    auto centralizers = nlohmann::ordered_json::array();
    for (const Integer& z : table.centralizers) centralizers.push_back(z.str());
    doc["centralizers"] = std::move(centralizers);
    auto characters = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.characters.size(); ++i) {
        nlohmann::ordered_json row;
        row["partition"] = table.characters[i].str();
        auto values = nlohmann::ordered_json::array();
        for (const Integer& v : table.values[i]) values.push_back(v.str());
        row["values"] = std::move(values);
        characters.push_back(std::move(row));
    }
    doc["characters"] = std::move(characters);
    return doc.dump(2);
}

} // namespace symchar
