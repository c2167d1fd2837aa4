#include "symchar/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "symchar/common.hpp"

namespace symchar {

namespace {

[[noreturn]] void parse_fail(const std::string& token, const std::string& why) {
    throw std::invalid_argument("bad partition token \"" + token + "\": " + why);
}

long long parse_positive_int(const std::string& token, const std::string& digits,
                             const std::string& what) {
    if (digits.empty()) parse_fail(token, "missing " + what);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            parse_fail(token, "non-numeric " + what);
    if (digits.size() > 7) parse_fail(token, what + " exceeds the structural limit");
    long long v = std::stoll(digits);
    if (v == 0) parse_fail(token, what + " must be positive");
    return v;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    long long total = 0;
    for (int p : parts_) {
        if (p <= 0) throw std::domain_error("partition parts must be positive");
        total += p;
    }
    if (total > kMaxN)
        throw std::domain_error("partition size exceeds the structural limit");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = static_cast<int>(total);
}

Partition Partition::parse(const std::string& text) {
    std::string stripped;
    stripped.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);

    std::vector<int> parts;
    if (stripped.empty()) return Partition(std::move(parts));

    std::size_t pos = 0;
    long long total = 0;
    while (pos <= stripped.size()) {
        std::size_t comma = stripped.find(',', pos);
        std::string token = stripped.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty()) parse_fail(token, "empty token");

        std::size_t caret = token.find('^');
        long long value, count = 1;
        if (caret == std::string::npos) {
            value = parse_positive_int(token, token, "part value");
        } else {
            value = parse_positive_int(token, token.substr(0, caret), "part value");
            count = parse_positive_int(token, token.substr(caret + 1), "exponent");
        }
        total += value * count;
        if (total > kMaxN)
            parse_fail(token, "partition size exceeds the structural limit");
        parts.insert(parts.end(), static_cast<std::size_t>(count),
                     static_cast<int>(value));

        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == stripped.size()) parse_fail("", "empty token");
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition(std::move(conj));
    conj.resize(static_cast<std::size_t>(parts_[0]));
    for (int j = 1; j <= parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_) {
            if (p >= j) ++count;
            else break;
        }
        conj[static_cast<std::size_t>(j - 1)] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::is_self_conjugate() const { return *this == conjugate(); }

MultiplicityForm Partition::multiplicity_form() const {
    MultiplicityForm out;
    for (int p : parts_) {
        if (!out.empty() && out.back().value == p) ++out.back().count;
        else out.push_back({p, 1});
    }
    return out;
}

std::string Partition::str() const {
    std::string out;
    for (const auto& [value, count] : multiplicity_form()) {
        if (!out.empty()) out += ',';
        out += std::to_string(value);
        if (count > 1) {
            out += '^';
            out += std::to_string(count);
        }
    }
    return out;
}

Parity parity(const Partition& beta) {
    // sum(beta_i - 1) = n - length
    return (beta.n() - beta.length()) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Integer centralizer_size(const Partition& beta) {
    Integer z = 1;
    for (const auto& [value, count] : beta.multiplicity_form()) {
        for (int i = 0; i < count; ++i) z *= value;
        z *= factorial(count);
    }
    return z;
}

LcmFactored lcm_of_parts(const Partition& beta) {
    if (beta.empty())
        throw std::domain_error("lcm_of_parts of the empty partition");
    std::map<long long, int> exps;
    for (int part : beta.parts())
        for (const auto& [prime, exp] : factorize(part))
            exps[prime] = std::max(exps[prime], exp);
    LcmFactored out;
    out.value = 1;
    for (const auto& [prime, exp] : exps) {
        out.factors.push_back({prime, exp});
        for (int i = 0; i < exp; ++i) out.value *= prime;
    }
    return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::domain_error("partitions_of of a negative integer");
    std::vector<int> current;
    // Reverse lexicographic: at every position try the largest legal part
    // first, so (n) comes first and (1^n) last.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            fn(Partition(current));
            return;
        }
        for (int v = std::min(max_part, remaining); v >= 1; --v) {
            current.push_back(v);
            self(self, remaining - v, v);
            current.pop_back();
        }
    };
    rec(rec, n, n);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> self_conjugate_partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (p.is_self_conjugate()) out.push_back(p);
    });
    return out;
}

} // namespace symchar
