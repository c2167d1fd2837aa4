#pragma once

#include <vector>

namespace symchar {

// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
    long long lo = 0;
    long long hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(long long x) const { return lo <= x && x <= hi; }
    long long count() const { return empty() ? 0 : hi - lo + 1; }
    bool operator==(const Interval&) const = default;
};

/// A finite union of integer intervals kept sorted, disjoint and
/// non-adjacent (as sets of integers).
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> ivs); // normalizes
    static IntervalSet single(Interval iv);

    const std::vector<Interval>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }
    bool contains(long long x) const;
    long long count() const; // number of integers covered

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet clamp(long long lo, long long hi) const;

    // All covered integers ascending; intended for small sets (tests, CLI).
    std::vector<long long> values() const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> ivs_;
};

} // namespace symchar
