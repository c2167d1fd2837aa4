#include "symchar/hooks.hpp"

#include <algorithm>
#include <stdexcept>

#include "symchar/common.hpp"

namespace symchar {

HookGrid::HookGrid(const Partition& alpha) {
    const auto& parts = alpha.parts();
    const auto conj = alpha.conjugate().parts();
    rows_.resize(parts.size());
    multiset_.reserve(static_cast<std::size_t>(alpha.n()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& row = rows_[i];
        row.resize(static_cast<std::size_t>(parts[i]));
        for (int j = 1; j <= parts[i]; ++j) {
            int arm = parts[i] - j;
            int leg = conj[static_cast<std::size_t>(j - 1)] - static_cast<int>(i) - 1;
            row[static_cast<std::size_t>(j - 1)] = arm + leg + 1;
            multiset_.push_back(row[static_cast<std::size_t>(j - 1)]);
        }
    }
    std::sort(multiset_.begin(), multiset_.end());
    internal_check(static_cast<int>(multiset_.size()) == alpha.n(),
                   "hook multiset must have n entries");
}

std::vector<Node> hooks_of_length(const Partition& alpha, int k) {
    if (k < 1) throw std::domain_error("hooks_of_length: k must be positive");
    std::vector<Node> out;
    const auto& parts = alpha.parts();
    const auto conj = alpha.conjugate().parts();
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i) {
        // Hook lengths are strictly decreasing along a row.
        for (int j = 1; j <= parts[static_cast<std::size_t>(i - 1)]; ++j) {
            int h = parts[static_cast<std::size_t>(i - 1)] - j +
                    conj[static_cast<std::size_t>(j - 1)] - i + 1;
            if (h == k) {
                out.push_back({i, j});
                break;
            }
            if (h < k) break;
        }
    }
    return out;
}

RimRemoval remove_rim_hook(const Partition& alpha, Node node) {
    const auto& parts = alpha.parts();
    if (node.row < 1 || node.row > static_cast<int>(parts.size()) ||
        node.col < 1 || node.col > parts[static_cast<std::size_t>(node.row - 1)])
        throw std::domain_error("remove_rim_hook: node outside the diagram");

    const auto conj = alpha.conjugate().parts();
    int lowest = conj[static_cast<std::size_t>(node.col - 1)]; // last row meeting column col

    std::vector<int> next(parts.begin(), parts.end());
    for (int row = node.row; row < lowest; ++row)
        next[static_cast<std::size_t>(row - 1)] = parts[static_cast<std::size_t>(row)] - 1;
    next[static_cast<std::size_t>(lowest - 1)] = node.col - 1;
    while (!next.empty() && next.back() == 0) next.pop_back();

    return {Partition(std::move(next)), lowest - node.row};
}

int h_weight(const Partition& alpha, int h) {
    if (h < 1) throw std::domain_error("h_weight: h must be positive");
    HookGrid grid(alpha);
    int count = 0;
    for (int hook : grid.hook_multiset())
        if (hook % h == 0) ++count;
    return count;
}

} // namespace symchar
