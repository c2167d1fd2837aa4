#include "symchar/selfconj.hpp"

#include <algorithm>
#include <stdexcept>

#include "symchar/common.hpp"
#include "symchar/hooks.hpp"

namespace symchar {

SelfConjugateShape::SelfConjugateShape(const Partition& alpha) : alpha_(alpha) {
    if (!alpha.is_self_conjugate())
        throw std::domain_error("partition " + alpha.str() +
                                " is not self-conjugate (conjugate is " +
                                alpha.conjugate().str() + ")");
    n_ = alpha.n();
    for (const auto& [value, count] : alpha.multiplicity_form()) {
        r_.push_back(value);
        k_.push_back(count);
    }
    m_ = static_cast<int>(r_.size());
    K_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (int i = 1; i <= m_; ++i)
        K_[static_cast<std::size_t>(i)] =
            K_[static_cast<std::size_t>(i - 1)] + k_[static_cast<std::size_t>(i - 1)];

    // Self-conjugacy in multiplicity form: r_i = k_1 + ... + k_{m-i+1}.
    for (int i = 1; i <= m_; ++i)
        internal_check(r(i) == K(m_ - i + 1),
                       "self-conjugate multiplicity identity violated");
}

long long SelfConjugateShape::r(int i) const {
    if (i == m_ + 1) return 0;
    internal_check(i >= 1 && i <= m_, "r index out of range");
    return r_[static_cast<std::size_t>(i - 1)];
}

long long SelfConjugateShape::k(int i) const {
    internal_check(i >= 1 && i <= m_, "k index out of range");
    return k_[static_cast<std::size_t>(i - 1)];
}

long long SelfConjugateShape::K(int i) const {
    internal_check(i >= 0 && i <= m_, "K index out of range");
    return K_[static_cast<std::size_t>(i)];
}

int SelfConjugateShape::M(int jdiag) const {
    internal_check(jdiag >= 1 && jdiag <= m_, "diagonal index out of range");
    return (m_ - jdiag + 3) / 2;
}

long long SelfConjugateShape::bound_candidate(int rx, int ry, int ku, int kw) const {
    if (rx == 0 || ry == 0 || ku > m_ || kw > m_) return n_; // boundary term
    return r(rx) + r(ry) - K(ku) - K(kw);
}

Interval block_entry_interval(const SelfConjugateShape& shape, int i, int j) {
    if (i < 1 || i > shape.s() || j < i || j > shape.m() || i + j > shape.m() + 1)
        throw std::domain_error("block_entry_interval: indices outside the nonzero region");
    long long lo = shape.r(i) + shape.r(j) - shape.K(i) - shape.K(j) + 1;
    long long hi = shape.r(i) + shape.r(j) - shape.K(i - 1) - shape.K(j - 1) - 1;
    return {lo, hi};
}

Interval gap_interval(const SelfConjugateShape& shape, int i, int j) {
    if (i < 1 || j < i || j > shape.m())
        throw std::domain_error("gap_interval: bad block indices");
    if (i + j >= shape.m() + 3) return {}; // empty by definition
    long long lo = shape.bound_candidate(i, j, i - 1, j - 1);
    long long hi = shape.bound_candidate(i - 1, j - 1, i - 1, j - 1);
    return {lo, hi};
}

IntervalSet gap_diagonal_union(const SelfConjugateShape& shape, int jdiag) {
    if (jdiag < 1 || jdiag > shape.m())
        throw std::domain_error("gap_diagonal_union: bad diagonal index");
    std::vector<Interval> blocks;
    for (int i = 1; i <= shape.M(jdiag); ++i)
        blocks.push_back(gap_interval(shape, i, i + jdiag - 1));
    // Blocks strictly decrease along the diagonal, so the union is disjoint
    // and the smallest element lives in the last block.
    for (std::size_t t = 0; t + 1 < blocks.size(); ++t)
        internal_check(blocks[t + 1].hi < blocks[t].lo,
                       "gap diagonal blocks must be disjoint and decreasing");
    return IntervalSet(std::move(blocks));
}

IntervalSet gap_set(const SelfConjugateShape& shape) {
    if (shape.m() == 0) return {};
    IntervalSet gaps = gap_diagonal_union(shape, 1);
    for (int j = 2; j <= shape.m(); ++j)
        gaps = gaps.intersect(gap_diagonal_union(shape, j));
    return gaps.clamp(1, shape.n());
}

IntervalSet gap_set(const Partition& alpha) {
    return gap_set(SelfConjugateShape(alpha));
}

IntervalSet term_intersection(const SelfConjugateShape& shape,
                              const std::vector<int>& tuple) {
    internal_check(static_cast<int>(tuple.size()) == shape.m(),
                   "term tuple must have one entry per diagonal");
    IntervalSet acc = IntervalSet::single(gap_interval(shape, tuple[0], tuple[0]));
    for (int j = 2; j <= shape.m(); ++j) {
        int i = tuple[static_cast<std::size_t>(j - 1)];
        acc = acc.intersect(IntervalSet::single(gap_interval(shape, i, i + j - 1)));
    }
    return acc;
}

std::optional<EmptinessReason> term_is_empty(const SelfConjugateShape& shape,
                                             const std::vector<int>& tuple) {
    const int m = shape.m();
    if (static_cast<int>(tuple.size()) != m)
        throw std::domain_error("term_is_empty: tuple length must equal m");
    for (int j = 1; j <= m; ++j) {
        int i = tuple[static_cast<std::size_t>(j - 1)];
        if (i < 1 || i > shape.M(j))
            throw std::domain_error("term_is_empty: tuple index outside 1..M_j");
    }
    auto at = [&](int j) { return tuple[static_cast<std::size_t>(j - 1)]; };

    for (int l = 1; l <= m - 1; ++l)
        if (at(l) - at(l + 1) >= 2 || at(l + 1) - at(l) >= 1)
            return EmptinessReason{1, l};

    // Strict comparisons: at equality the three blocks still share a point.
    for (int l = 1; l <= m - 2; ++l) {
        if (at(l) == at(l + 1) && at(l + 1) == at(l + 2)) {
            int i = at(l);
            if (i >= 2 &&
                shape.r(i) + shape.r(i + l - 1) >
                    shape.r(i - 1) + shape.r(i + l) - shape.k(i + l) - shape.k(i + l - 1))
                return EmptinessReason{2, l};
        }
    }
    for (int l = 1; l <= m - 2; ++l) {
        if (at(l) == at(l + 1) + 1 && at(l + 1) == at(l + 2) + 1) {
            int i = at(l + 2);
            if (shape.r(i) + shape.r(i + l + 1) >
                shape.r(i + 1) + shape.r(i + l) - shape.k(i + 1) - shape.k(i))
                return EmptinessReason{3, l};
        }
    }
    return std::nullopt;
}

namespace {

int max_north_v(const SelfConjugateShape& shape) { return shape.m() / 2 + 1; }
int max_east_v(const SelfConjugateShape& shape) { return (shape.m() + 1) / 2; }

} // namespace

LadderSpec ladder_spec(const SelfConjugateShape& shape, int v, LadderDirection dir) {
    const bool north = dir == LadderDirection::North;
    const int vmax = north ? max_north_v(shape) : max_east_v(shape);
    if (v < 2 || v > vmax)
        throw std::domain_error("ladder_spec: v outside the legal range");

    LadderSpec spec;
    spec.v = v;
    spec.dir = dir;
    constexpr long long kUnset = 1LL << 62;
    spec.a = -kUnset;
    spec.c = -kUnset;
    spec.b = kUnset;
    spec.d = kUnset;
    const int last = north ? v - 2 : v - 1; // at least one candidate since v >= 2
    for (int i = 0; i <= last; ++i) {
        spec.a = std::max(spec.a, shape.bound_candidate(v - i, v + i, v - i - 1, v + i - 1));
        spec.b = std::min(spec.b, shape.bound_candidate(v - i - 1, v + i - 1, v - i - 1, v + i - 1));
        if (north) {
            spec.c = std::max(spec.c, shape.bound_candidate(v - i - 1, v + i, v - i - 2, v + i - 1));
            spec.d = std::min(spec.d, shape.bound_candidate(v - i - 2, v + i - 1, v - i - 2, v + i - 1));
        } else {
            spec.c = std::max(spec.c, shape.bound_candidate(v - i, v + i + 1, v - i - 1, v + i));
            spec.d = std::min(spec.d, shape.bound_candidate(v - i - 1, v + i, v - i - 1, v + i));
        }
    }
    return spec;
}

Interval ladder_interval(const SelfConjugateShape& shape, int v, LadderDirection dir) {
    if (v == 1) {
        if (shape.m() == 0) return {};
        return {2 * shape.r(1), shape.n()};
    }
    return ladder_spec(shape, v, dir).interval();
}

std::vector<LadderSpec> all_ladders(const SelfConjugateShape& shape) {
    std::vector<LadderSpec> out;
    int top = std::max(max_north_v(shape), max_east_v(shape));
    for (int v = 2; v <= top; ++v) {
        if (v <= max_north_v(shape)) out.push_back(ladder_spec(shape, v, LadderDirection::North));
        if (v <= max_east_v(shape)) out.push_back(ladder_spec(shape, v, LadderDirection::East));
    }
    return out;
}

IntervalSet predicted_zero_parts(const SelfConjugateShape& shape) {
    if (shape.m() == 0) return {};
    std::vector<Interval> ivs;
    ivs.push_back(ladder_interval(shape, 1, LadderDirection::North));
    for (const LadderSpec& spec : all_ladders(shape)) ivs.push_back(spec.interval());
    return IntervalSet(std::move(ivs)).clamp(1, shape.n());
}

std::optional<Certificate> self_conj_even_big_part(const SelfConjugateShape& shape,
                                                   const Partition& beta) {
    if (beta.n() != shape.n())
        throw std::domain_error("self_conj_even_big_part: |alpha| != |beta|");
    // At most the largest part can exceed n/2.
    if (beta.empty()) return std::nullopt;
    long long part = beta.parts().front();
    if (part % 2 != 0 || 2 * part <= shape.n()) return std::nullopt;
    Certificate cert;
    cert.verdict = Verdict::Zero;
    cert.rule = Rule::SelfConjEvenBigPart;
    cert.witness = Json{{"part", part}, {"n", shape.n()}};
    return cert;
}

StaircaseFamily staircase_family(StaircaseVariant variant, int s, int x, int y) {
    if (s < 2) throw std::domain_error("staircase_family: s must be >= 2");
    if (x < 1 || y < 1 || x > y)
        throw std::domain_error("staircase_family: need 1 <= x <= y");

    std::vector<int> parts;
    long long expected_n = 0;
    if (variant == StaircaseVariant::A) {
        // values sx+iy (i = s..1) with multiplicity x, then jx (j = s..1)
        // with multiplicity y
        for (int i = s; i >= 1; --i)
            parts.insert(parts.end(), static_cast<std::size_t>(x), s * x + i * y);
        for (int j = s; j >= 1; --j)
            parts.insert(parts.end(), static_cast<std::size_t>(y), j * x);
        expected_n = static_cast<long long>(s) * x *
                     (static_cast<long long>(s) * (x + y) + y);
    } else {
        // values sx+iy (i = s-1..0) with multiplicity x, then jx
        // (j = s-1..1) with multiplicity y
        for (int i = s - 1; i >= 0; --i)
            parts.insert(parts.end(), static_cast<std::size_t>(x), s * x + i * y);
        for (int j = s - 1; j >= 1; --j)
            parts.insert(parts.end(), static_cast<std::size_t>(y), j * x);
        expected_n = static_cast<long long>(s) * x *
                     (static_cast<long long>(s) * (x + y) - y);
    }

    StaircaseFamily fam;
    fam.alpha = Partition(std::move(parts));
    fam.n = fam.alpha.n();
    internal_check(fam.n == expected_n, "staircase family: size formula violated");
    internal_check(fam.alpha.is_self_conjugate(),
                   "staircase family: constructed shape is not self-conjugate");
    fam.predicted_parts = {x + y, 2LL * (x + y)};
    IntervalSet gaps = gap_set(fam.alpha);
    for (long long part : fam.predicted_parts)
        internal_check(gaps.contains(part),
                       "staircase family: predicted part is not in the gap set");
    return fam;
}

Json gaps_json(const Partition& alpha) {
    SelfConjugateShape shape(alpha);
    IntervalSet gaps = gap_set(shape);
    IntervalSet predicted = predicted_zero_parts(shape);

    Json doc;
    doc["alpha"] = alpha.str();
    doc["n"] = shape.n();
    auto gap_list = Json::array();
    for (const Interval& iv : gaps.intervals())
        gap_list.push_back(Json::array({iv.lo, iv.hi}));
    doc["G"] = std::move(gap_list);

    auto ladder_list = Json::array();
    if (shape.m() > 0) {
        Interval first = ladder_interval(shape, 1, LadderDirection::North);
        ladder_list.push_back(Json{{"v", 1}, {"dir", "N"}, {"lo", first.lo}, {"hi", first.hi}});
        ladder_list.push_back(Json{{"v", 1}, {"dir", "E"}, {"lo", first.lo}, {"hi", first.hi}});
    }
    for (const LadderSpec& spec : all_ladders(shape)) {
        Interval iv = spec.interval();
        ladder_list.push_back(Json{{"v", spec.v},
                                   {"dir", spec.dir == LadderDirection::North ? "N" : "E"},
                                   {"lo", iv.lo},
                                   {"hi", iv.hi}});
    }
    doc["ladders"] = std::move(ladder_list);

    auto predicted_list = Json::array();
    for (const Interval& iv : predicted.intervals())
        predicted_list.push_back(Json::array({iv.lo, iv.hi}));
    doc["predicted_parts"] = std::move(predicted_list);

    // ladder coverage of the gap set, as exact counts
    doc["predicted_count"] = predicted.count();
    doc["gap_count"] = gaps.count();
    return doc;
}

} // namespace symchar
