#pragma once

#include <optional>
#include <vector>

#include "symchar/certificate.hpp"
#include "symchar/intervals.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// A self-conjugate partition viewed through its multiplicity form
/// r_1^{k_1} ... r_m^{k_m} (r strictly decreasing). Self-conjugacy pins
/// r_i = k_1 + ... + k_{m-i+1}, which is what makes the hook-length gap set
/// computable from (r, k) alone, without ever building the hook grid.
class SelfConjugateShape {
public:
    // Throws std::domain_error unless alpha is self-conjugate.
    explicit SelfConjugateShape(const Partition& alpha);

    int m() const { return m_; }                 // number of distinct values
    int s() const { return (m_ + 1) / 2; }
    long long n() const { return n_; }
    const Partition& partition() const { return alpha_; }

    long long r(int i) const;  // 1-based; r(m+1) = 0
    long long k(int i) const;  // 1-based
    long long K(int i) const;  // prefix sum k_1 + ... + k_i; K(0) = 0

    // Largest row index of the j-th gap diagonal: floor((m - j + 3) / 2).
    int M(int jdiag) const;

    // r_{rx} + r_{ry} - K_{ku} - K_{kw} under the boundary conventions:
    // any term touching r_0 or k_{m+1} evaluates to n, and r_{m+1} = 0.
    long long bound_candidate(int rx, int ry, int ku, int kw) const;

private:
    Partition alpha_;
    std::vector<long long> r_, k_, K_;
    int m_ = 0;
    long long n_ = 0;
};

// Entry range of the block of hook lengths in strip (i,j); requires
// 1 <= i <= s, i <= j <= m, i + j <= m + 1.
Interval block_entry_interval(const SelfConjugateShape& shape, int i, int j);

// The gap interval G_{i,j} (1 <= i <= j <= m); empty for i + j >= m + 3.
Interval gap_interval(const SelfConjugateShape& shape, int i, int j);

// Union of G_{i, i+j-1} over i = 1..M_j for diagonal j; the blocks are
// checked pairwise disjoint and strictly decreasing along the diagonal.
IntervalSet gap_diagonal_union(const SelfConjugateShape& shape, int jdiag);

// The full gap set: intersection of all diagonal unions, clamped to [1, n].
// Equals [1, n] minus the set of hook lengths (the module's defining
// cross-check, exercised in the tests).
IntervalSet gap_set(const SelfConjugateShape& shape);
IntervalSet gap_set(const Partition& alpha);

struct EmptinessReason {
    int condition = 0; // 1, 2 or 3
    int l = 0;         // witness position
};

// Sufficient emptiness conditions for one term of the distributed gap-set
// union, indexed by a tuple (i_1..i_m) with 1 <= i_j <= M_j.
std::optional<EmptinessReason> term_is_empty(const SelfConjugateShape& shape,
                                             const std::vector<int>& tuple);

// Direct intersection of the G_{i_j, j+i_j-1}; the oracle the emptiness
// conditions are tested against.
IntervalSet term_intersection(const SelfConjugateShape& shape,
                              const std::vector<int>& tuple);

enum class LadderDirection { North, East };

struct LadderSpec {
    int v = 0;
    LadderDirection dir = LadderDirection::North;
    long long a = 0, b = 0, c = 0, d = 0;
    Interval interval() const { return {std::max(a, c), std::min(b, d)}; }
};

// v = 1 is the single interval [2 r_1, n] in either direction; for v >= 2
// the four ladder bounds are evaluated with the boundary conventions above.
// Legal ranges: North 1 <= v <= floor(m/2) + 1, East 1 <= v <= floor((m+1)/2).
Interval ladder_interval(const SelfConjugateShape& shape, int v, LadderDirection dir);
LadderSpec ladder_spec(const SelfConjugateShape& shape, int v, LadderDirection dir);

// Every legal ladder with v >= 2, North before East per v.
std::vector<LadderSpec> all_ladders(const SelfConjugateShape& shape);

// Union of all ladder intervals (v = 1 included); any class with a part in
// this set is annihilated by chi^alpha. Always a subset of gap_set.
IntervalSet predicted_zero_parts(const SelfConjugateShape& shape);

// Zero certificate when beta has an even part > n/2 (the top hook length is
// odd and every other hook is <= n/2).
std::optional<Certificate> self_conj_even_big_part(const SelfConjugateShape& shape,
                                                   const Partition& beta);

enum class StaircaseVariant { A, B };

struct StaircaseFamily {
    Partition alpha;
    long long n = 0;
    std::vector<long long> predicted_parts; // {x+y, 2(x+y)}
};

// The two staircase-like families with certified gap parts x+y and 2(x+y).
// Requires 1 <= x <= y and s >= 2; self-conjugacy, the closed form for n,
// and gap membership of the predicted parts are asserted, not assumed.
StaircaseFamily staircase_family(StaircaseVariant variant, int s, int x, int y);

// {alpha, n, G:[[lo,hi],...], ladders:[{v,dir,lo,hi}], predicted_parts:[...],
//  coverage_ratio} — the CLI `gaps` payload.
Json gaps_json(const Partition& alpha);

} // namespace symchar
