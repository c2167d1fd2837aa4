#pragma once

#include <optional>
#include <vector>

#include "symchar/certificate.hpp"
#include "symchar/engine.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Lam-Leung weight set W(m): the possible counts of m-th roots of unity
/// summing to zero, i.e. all nonnegative combinations of the distinct
/// primes dividing m. W(1) = {0}.
class WeightSet {
public:
    explicit WeightSet(const LcmFactored& m);
    bool contains(const Integer& k) const;
    const std::vector<long long>& primes() const { return primes_; }
    const Integer& modulus() const { return modulus_; }

private:
    Integer modulus_;
    std::vector<long long> primes_; // ascending
};

// k in W(m); m >= 1 required.
bool weight_set_contains(const Integer& k, long long m);

// Nonzero certificate when deg(chi^alpha) is not in W(lcm(beta parts)):
// tagged PrimePowerDegree when the lcm is a prime power, FrobeniusDegree
// when it has exactly two prime divisors p,q and the degree is pq-p-q,
// WeightSet otherwise.
std::optional<Certificate> certify_nonzero(const Partition& alpha,
                                           const Partition& beta);

// Zero certificate for hook-shaped alpha = (a, 1^{n-a}) with n-a >= a > 1
// and beta = {chain parts all >= a} + {a, 1}: the staged removals leave
// (a, 1), which has no a-hook.
std::optional<Certificate> certify_zero_hook_chain(const Partition& alpha,
                                                   const Partition& beta);

struct ProcessOptions {
    // |gamma| up to which "gamma is p-vanishing" may be established by
    // exhaustive brute force instead of the p-adic-type sufficient condition.
    int pvanish_bound = 12;
};

// Zero certificate from the staged removal process: split beta after its
// s largest parts; if every removal result has degree divisible by p and
// the remaining class (of size m > 1) is p-vanishing, chi^alpha(beta) = 0.
// Throws std::domain_error for s outside [1, parts-1] or non-prime p.
std::optional<Certificate> certify_zero_process(const Partition& alpha,
                                                const Partition& beta, int s,
                                                long long p, MemoCache& cache,
                                                const ProcessOptions& opt = {});

struct SingleRemovalFamily {
    int a = 0, c = 0, l = 0, k = 0;
    long long p = 0;
    Partition gamma;
};
// Pattern alpha = (a, cp+1, 2^l, 1^k), beta = (a+l+k+1, gamma) with
// a >= cp+1, p not dividing m = cp+l, gamma of p-adic type.
std::optional<SingleRemovalFamily> match_single_removal_family(const Partition& alpha, const Partition& beta);

struct DoubleRemovalFamily {
    int a = 0, b = 0, c = 0, l = 0, t = 0, k = 0;
    long long p = 0;
    Partition gamma;
};
// Pattern alpha = (a, b, cp+2, 3^l, 2^t, 1^k), beta = (a+l+t+k+2, b+l+t,
// gamma) with a >= b >= cp+2, p not dividing m = cp+l, gamma of p-adic type.
std::optional<DoubleRemovalFamily> match_double_removal_family(const Partition& alpha, const Partition& beta);

// True iff every irreducible character with degree divisible by p vanishes
// on the class beta of S_n.
bool is_p_vanishing_class(int n, long long p, const Partition& beta,
                          MemoCache& cache);

struct ScanEntry {
    Partition beta;
    bool p_adic = false;
};
struct ScanReport {
    int n = 0;
    long long p = 0;
    std::vector<ScanEntry> vanishing;        // classes ascending
    std::vector<Partition> thm21_violations; // p-adic but not vanishing: bug
};

// Exhaustive p-vanishing scan over all classes of S_n; any p-adic-type
// class that fails to vanish lands in thm21_violations (a hard error for
// the engine, signalled by the CLI with exit 3).
ScanReport scan_p_vanishing(int n, long long p, MemoCache& cache, int jobs = 1);
Json scan_json(const ScanReport& report);

struct CertifyOptions {
    int s_cap = 3;          // max split depth tried for the removal process
    int pvanish_bound = 12; // forwarded to certify_zero_process
};

// The combined certifier. Precedence: SelfConjOdd, GapInterval,
// SelfConjEvenBigPart (self-conjugate alpha only), then the Nonzero rules,
// then HookChainMissing, then ProcessVanishing over s = 1..cap and primes
// p <= n. Returns the first rule that fires.
std::optional<Certificate> certify_chain(const Partition& alpha,
                                         const Partition& beta,
                                         MemoCache& cache,
                                         const CertifyOptions& opt = {});

struct SweepContradiction {
    Partition alpha, beta;
    Certificate cert;
    Integer mn;
};
struct SweepResult {
    long long pairs = 0;
    long long fired = 0;
    std::vector<SweepContradiction> contradictions;
};

// Soundness sweep: run the certifier chain on every (alpha, beta) pair for
// all n' <= n_max and compare each verdict against the exact MN value.
SweepResult sweep_verify(int n_max, MemoCache& cache, const CertifyOptions& opt = {});
Json sweep_json(int n_max, const SweepResult& result);

} // namespace symchar
