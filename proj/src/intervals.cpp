#include "symchar/intervals.hpp"

#include <algorithm>

namespace symchar {

IntervalSet::IntervalSet(std::vector<Interval> ivs) {
    ivs.erase(std::remove_if(ivs.begin(), ivs.end(),
                             [](const Interval& iv) { return iv.empty(); }),
              ivs.end());
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    for (const Interval& iv : ivs) {
        // merge overlapping and adjacent runs
        if (!ivs_.empty() && iv.lo <= ivs_.back().hi + 1)
            ivs_.back().hi = std::max(ivs_.back().hi, iv.hi);
        else
            ivs_.push_back(iv);
    }
}

IntervalSet IntervalSet::single(Interval iv) { return IntervalSet({iv}); }

bool IntervalSet::contains(long long x) const {
    auto it = std::upper_bound(ivs_.begin(), ivs_.end(), x,
                               [](long long v, const Interval& iv) { return v < iv.lo; });
    return it != ivs_.begin() && std::prev(it)->contains(x);
}

long long IntervalSet::count() const {
    long long total = 0;
    for (const Interval& iv : ivs_) total += iv.count();
    return total;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> merged = ivs_;
    merged.insert(merged.end(), other.ivs_.begin(), other.ivs_.end());
    return IntervalSet(std::move(merged));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < ivs_.size() && j < other.ivs_.size()) {
        const Interval& a = ivs_[i];
        const Interval& b = other.ivs_[j];
        Interval cut{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
        if (!cut.empty()) out.push_back(cut);
        if (a.hi < b.hi) ++i;
        else ++j;
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::clamp(long long lo, long long hi) const {
    return intersect(IntervalSet({{lo, hi}}));
}

std::vector<long long> IntervalSet::values() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (const Interval& iv : ivs_)
        for (long long x = iv.lo; x <= iv.hi; ++x) out.push_back(x);
    return out;
}

} // namespace symchar
