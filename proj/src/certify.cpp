#include "symchar/certify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "symchar/common.hpp"
#include "symchar/padic.hpp"
#include "symchar/selfconj.hpp"

namespace symchar {

const char* to_string(Verdict v) {
    return v == Verdict::Zero ? "zero" : "nonzero";
}

const char* to_string(Rule r) {
    switch (r) {
        case Rule::WeightSet: return "WeightSet";
        case Rule::PrimePowerDegree: return "PrimePowerDegree";
        case Rule::FrobeniusDegree: return "FrobeniusDegree";
        case Rule::HookChainMissing: return "HookChainMissing";
        case Rule::ProcessVanishing: return "ProcessVanishing";
        case Rule::SelfConjOdd: return "SelfConjOdd";
        case Rule::SelfConjEvenBigPart: return "SelfConjEvenBigPart";
        case Rule::GapInterval: return "GapInterval";
        case Rule::ExactMN: return "ExactMN";
    }
    return "?";
}

Json certificate_json(const Partition& alpha, const Partition& beta,
                      const Certificate& cert, std::optional<bool> verified_by_mn) {
    Json doc;
    doc["alpha"] = alpha.str();
    doc["beta"] = beta.str();
    doc["verdict"] = to_string(cert.verdict);
    doc["rule"] = to_string(cert.rule);
    doc["witness"] = cert.witness;
    if (verified_by_mn.has_value()) doc["verified_by_mn"] = *verified_by_mn;
    return doc;
}

WeightSet::WeightSet(const LcmFactored& m) : modulus_(m.value) {
    for (const auto& [prime, exp] : m.factors) primes_.push_back(prime);
}

namespace {

// k = x*p + y*q with x,y >= 0, for distinct primes p < q.
bool two_prime_representable(long long k, long long p, long long q) {
    if (k < 0) return false;
    // everything past the Frobenius number pq-p-q is representable
    if (k > p * q - p - q) return true;
    // minimal x with x*p == k (mod q)
    long long x = 0;
    while (x < q && (k - x * p) % q != 0) ++x;
    return x < q && x * p <= k;
}

bool representable(long long k, const std::vector<long long>& primes,
                   std::size_t take) {
    if (k == 0) return true;
    if (take == 0) return false;
    if (take == 1) return k % primes[0] == 0;
    if (take == 2) return two_prime_representable(k, primes[0], primes[1]);
    long long g = primes[take - 1];
    for (long long c = 0; c * g <= k; ++c)
        if (representable(k - c * g, primes, take - 1)) return true;
    return false;
}

} // namespace

bool WeightSet::contains(const Integer& k) const {
    if (k < 0) return false;
    if (primes_.empty()) return k == 0;
    if (primes_.size() == 1) return k % primes_[0] == 0;
    // beyond the Frobenius bound of the two smallest primes everything is in
    Integer bound = Integer(primes_[0]) * primes_[1];
    if (k >= bound) return true;
    return representable(k.convert_to<long long>(), primes_, primes_.size());
}

bool weight_set_contains(const Integer& k, long long m) {
    if (m < 1) throw std::domain_error("weight_set_contains: m must be >= 1");
    LcmFactored f;
    f.value = m;
    f.factors = factorize(m);
    return WeightSet(f).contains(k);
}

std::optional<Certificate> certify_nonzero(const Partition& alpha,
                                           const Partition& beta) {
    if (alpha.n() != beta.n())
        throw std::domain_error("certify_nonzero: |alpha| != |beta|");
    if (beta.empty()) return std::nullopt;

    LcmFactored lcm = lcm_of_parts(beta);
    if (lcm.value == 1) return std::nullopt; // identity class: nothing to certify
    WeightSet weights(lcm);
    Integer deg = degree(alpha);
    if (weights.contains(deg)) return std::nullopt;

    Certificate cert;
    cert.verdict = Verdict::Nonzero;
    if (weights.primes().size() == 1) {
        cert.rule = Rule::PrimePowerDegree;
        cert.witness = Json{{"p", weights.primes()[0]},
                            {"t", lcm.factors[0].exp},
                            {"degree", deg.str()}};
    } else if (weights.primes().size() == 2 &&
               deg == Integer(weights.primes()[0]) * weights.primes()[1] -
                          weights.primes()[0] - weights.primes()[1]) {
        cert.rule = Rule::FrobeniusDegree;
        cert.witness = Json{{"p", weights.primes()[0]},
                            {"q", weights.primes()[1]},
                            {"degree", deg.str()}};
    } else {
        cert.rule = Rule::WeightSet;
        cert.witness = Json{{"lcm", lcm.value.str()},
                            {"primes", weights.primes()},
                            {"degree", deg.str()}};
    }
    return cert;
}

std::optional<Certificate> certify_zero_hook_chain(const Partition& alpha,
                                                   const Partition& beta) {
    if (alpha.n() != beta.n())
        throw std::domain_error("certify_zero_hook_chain: |alpha| != |beta|");
    const auto& parts = alpha.parts();
    if (parts.size() < 2) return std::nullopt;
    int arm = parts[0];
    if (arm <= 1) return std::nullopt;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != 1) return std::nullopt; // not a hook shape
    int n = alpha.n();
    if (n - arm < arm) return std::nullopt;

    // beta must be {chain parts, all >= arm} + {arm, 1}
    std::vector<int> rest(beta.parts());
    auto one = std::find(rest.begin(), rest.end(), 1);
    if (one == rest.end()) return std::nullopt;
    rest.erase(one);
    auto head = std::find(rest.begin(), rest.end(), arm);
    if (head == rest.end()) return std::nullopt;
    rest.erase(head);
    if (rest.empty() || rest.back() < arm) return std::nullopt;

    Certificate cert;
    cert.verdict = Verdict::Zero;
    cert.rule = Rule::HookChainMissing;
    cert.witness = Json{{"alpha1", arm}, {"chain", rest}};
    return cert;
}

std::optional<Certificate> certify_zero_process(const Partition& alpha,
                                                const Partition& beta, int s,
                                                long long p, MemoCache& cache,
                                                const ProcessOptions& opt) {
    if (alpha.n() != beta.n())
        throw std::domain_error("certify_zero_process: |alpha| != |beta|");
    if (s < 1 || s >= beta.length())
        throw std::domain_error("certify_zero_process: s outside [1, parts-1]");
    if (!is_prime(p)) throw std::domain_error("certify_zero_process: p is not prime");

    const auto& parts = beta.parts();
    std::vector<int> prefix(parts.begin(), parts.begin() + s);
    Partition gamma(std::vector<int>(parts.begin() + s, parts.end()));
    if (gamma.n() <= 1) return std::nullopt;

    const char* gamma_by = nullptr;
    if (is_p_adic_type(gamma, p))
        gamma_by = "p_adic_type";
    else if (gamma.n() <= opt.pvanish_bound &&
             is_p_vanishing_class(gamma.n(), p, gamma, cache))
        gamma_by = "brute_force";
    else
        return std::nullopt;

    auto seqs = removal_sequences(alpha, prefix);
    auto results = Json::array();
    for (const RemovalSequence& seq : seqs) {
        Integer deg = degree(seq.result);
        if (deg % p != 0) return std::nullopt;
        results.push_back(Json{{"partition", seq.result.str()},
                               {"degree_valuation", p_valuation(deg, p)}});
    }

    Certificate cert;
    cert.verdict = Verdict::Zero;
    cert.rule = Rule::ProcessVanishing;
    cert.witness = Json{{"s", s},
                        {"p", p},
                        {"sequence_count", seqs.size()},
                        {"results", std::move(results)},
                        {"gamma", gamma.str()},
                        {"gamma_vanishing_by", gamma_by}};
    return cert;
}

namespace {

// alpha = (head..., then tails of fixed values); fills counts of trailing
// runs of expected values, smallest last. Returns false on any other shape.
bool split_tail_runs(const std::vector<int>& parts, std::size_t head_len,
                     const std::vector<int>& run_values, std::vector<int>& counts) {
    counts.assign(run_values.size(), 0);
    std::size_t pos = head_len;
    for (std::size_t r = 0; r < run_values.size(); ++r)
        while (pos < parts.size() && parts[pos] == run_values[r]) {
            ++counts[r];
            ++pos;
        }
    return pos == parts.size();
}

} // namespace

std::optional<SingleRemovalFamily> match_single_removal_family(const Partition& alpha, const Partition& beta) {
    if (alpha.n() != beta.n()) return std::nullopt;
    const auto& parts = alpha.parts();
    if (parts.size() < 3) return std::nullopt;
    int a = parts[0];
    int second = parts[1];
    if (second < 3) return std::nullopt; // cp+1 >= 3
    std::vector<int> counts;
    if (!split_tail_runs(parts, 2, {2, 1}, counts)) return std::nullopt;
    int l = counts[0], k = counts[1];
    if (l < 1) return std::nullopt;

    if (beta.empty() || beta.parts()[0] != a + l + k + 1) return std::nullopt;
    Partition gamma(std::vector<int>(beta.parts().begin() + 1, beta.parts().end()));

    for (const auto& [p, exp] : factorize(second - 1)) {
        (void)exp;
        int c = static_cast<int>((second - 1) / p);
        long long m = static_cast<long long>(c) * p + l;
        if (a < second) continue; // a >= cp+1
        if (m % p == 0) continue;
        if (gamma.n() != m) continue;
        if (!is_p_adic_type(gamma, p)) continue;
        return SingleRemovalFamily{a, c, l, k, p, gamma};
    }
    return std::nullopt;
}

std::optional<DoubleRemovalFamily> match_double_removal_family(const Partition& alpha, const Partition& beta) {
    if (alpha.n() != beta.n()) return std::nullopt;
    const auto& parts = alpha.parts();
    if (parts.size() < 5) return std::nullopt;
    int a = parts[0], b = parts[1];
    int third = parts[2];
    if (third < 4) return std::nullopt; // cp+2 >= 4
    std::vector<int> counts;
    if (!split_tail_runs(parts, 3, {3, 2, 1}, counts)) return std::nullopt;
    int l = counts[0], t = counts[1], k = counts[2];
    if (l < 1 || t < 1) return std::nullopt;
    if (b < third) return std::nullopt; // a >= b >= cp+2

    if (beta.length() < 2) return std::nullopt;
    if (beta.parts()[0] != a + l + t + k + 2) return std::nullopt;
    if (beta.parts()[1] != b + l + t) return std::nullopt;
    Partition gamma(std::vector<int>(beta.parts().begin() + 2, beta.parts().end()));

    for (const auto& [p, exp] : factorize(third - 2)) {
        (void)exp;
        int c = static_cast<int>((third - 2) / p);
        long long m = static_cast<long long>(c) * p + l;
        if (m % p == 0) continue;
        if (gamma.n() != m) continue;
        if (!is_p_adic_type(gamma, p)) continue;
        return DoubleRemovalFamily{a, b, c, l, t, k, p, gamma};
    }
    return std::nullopt;
}

bool is_p_vanishing_class(int n, long long p, const Partition& beta,
                          MemoCache& cache) {
    if (beta.n() != n) throw std::domain_error("is_p_vanishing_class: beta must partition n");
    if (!is_prime(p)) throw std::domain_error("is_p_vanishing_class: p is not prime");
    for (const Partition& alpha : partitions_of(n)) {
        if (degree(alpha) % p != 0) continue;
        if (mn_value(alpha, beta, cache) != 0) return false;
    }
    return true;
}

ScanReport scan_p_vanishing(int n, long long p, MemoCache& cache, int jobs) {
    if (!is_prime(p)) throw std::domain_error("scan_p_vanishing: p is not prime");
    if (n < 0) throw std::domain_error("scan_p_vanishing: negative n");

    ScanReport report;
    report.n = n;
    report.p = p;

    std::vector<Partition> classes = partitions_of(n);
    std::reverse(classes.begin(), classes.end()); // ascending, (1^n) first

    std::vector<Partition> singular;
    for (const Partition& alpha : partitions_of(n))
        if (degree(alpha) % p == 0) singular.push_back(alpha);

    std::vector<char> vanishing(classes.size(), 0);
    auto scan_class = [&](std::size_t idx) {
        for (const Partition& alpha : singular)
            if (mn_value(alpha, classes[idx], cache) != 0) return;
        vanishing[idx] = 1;
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < classes.size(); ++i) scan_class(i);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w]() {
                for (std::size_t i = static_cast<std::size_t>(w); i < classes.size();
                     i += static_cast<std::size_t>(jobs))
                    scan_class(i);
            });
        for (auto& worker : workers) worker.join();
    }

    for (std::size_t i = 0; i < classes.size(); ++i) {
        bool adic = is_p_adic_type(classes[i], p);
        if (vanishing[i])
            report.vanishing.push_back({classes[i], adic});
        else if (adic)
            report.thm21_violations.push_back(classes[i]);
    }
    return report;
}

Json scan_json(const ScanReport& report) {
    Json doc;
    doc["n"] = report.n;
    doc["p"] = report.p;
    auto list = Json::array();
    for (const ScanEntry& entry : report.vanishing)
        list.push_back(Json{{"beta", entry.beta.str()}, {"p_adic", entry.p_adic}});
    doc["vanishing"] = std::move(list);
    auto violations = Json::array();
    for (const Partition& beta : report.thm21_violations)
        violations.push_back(beta.str());
    doc["thm21_violations"] = std::move(violations);
    return doc;
}

std::optional<Certificate> certify_chain(const Partition& alpha,
                                         const Partition& beta, MemoCache& cache,
                                         const CertifyOptions& opt) {
    if (alpha.n() != beta.n())
        throw std::domain_error("certify_chain: |alpha| != |beta|");

    if (alpha.is_self_conjugate() && !alpha.empty()) {
        if (parity(beta) == Parity::Odd) {
            Certificate cert;
            cert.verdict = Verdict::Zero;
            cert.rule = Rule::SelfConjOdd;
            cert.witness = Json{{"parity", "odd"}};
            return cert;
        }
        SelfConjugateShape shape(alpha);
        IntervalSet gaps = gap_set(shape);
        for (const auto& [value, count] : beta.multiplicity_form()) {
            (void)count;
            if (!gaps.contains(value)) continue;
            for (const Interval& iv : gaps.intervals()) {
                if (!iv.contains(value)) continue;
                Certificate cert;
                cert.verdict = Verdict::Zero;
                cert.rule = Rule::GapInterval;
                cert.witness = Json{{"part", value},
                                    {"interval", Json::array({iv.lo, iv.hi})}};
                return cert;
            }
        }
        if (auto cert = self_conj_even_big_part(shape, beta)) return cert;
    }

    if (!beta.empty()) {
        if (auto cert = certify_nonzero(alpha, beta)) return cert;
    }
    if (auto cert = certify_zero_hook_chain(alpha, beta)) return cert;

    ProcessOptions popt{opt.pvanish_bound};
    std::vector<long long> primes = primes_up_to(alpha.n());
    int s_max = std::min(beta.length() - 1, opt.s_cap);
    for (int s = 1; s <= s_max; ++s)
        for (long long p : primes)
            if (auto cert = certify_zero_process(alpha, beta, s, p, cache, popt))
                return cert;
    return std::nullopt;
}

SweepResult sweep_verify(int n_max, MemoCache& cache, const CertifyOptions& opt) {
    SweepResult result;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Partition> all = partitions_of(n);
        for (const Partition& alpha : all) {
            for (const Partition& beta : all) {
                ++result.pairs;
                auto cert = certify_chain(alpha, beta, cache, opt);
                if (!cert) continue;
                ++result.fired;
                Integer value = mn_value(alpha, beta, cache);
                bool consistent = cert->verdict == Verdict::Zero ? value == 0 : value != 0;
                if (!consistent)
                    result.contradictions.push_back({alpha, beta, *cert, value});
            }
        }
    }
    return result;
}

Json sweep_json(int n_max, const SweepResult& result) {
    Json doc;
    doc["max_n"] = n_max;
    doc["pairs"] = result.pairs;
    doc["fired"] = result.fired;
    auto list = Json::array();
    for (const SweepContradiction& c : result.contradictions) {
        Json entry = certificate_json(c.alpha, c.beta, c.cert, false);
        entry["mn_value"] = c.mn.str();
        list.push_back(std::move(entry));
    }
    doc["contradictions"] = std::move(list);
    return doc;
}

} // namespace symchar
