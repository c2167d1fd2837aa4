#pragma once

#include <vector>

#include "symchar/partition.hpp"

namespace symchar {

/// Hook lengths of every node of a Young diagram, plus the multiset of all
/// of them. h(i,j) = (alpha_i - j) + (alpha^T_j - i) + 1.
class HookGrid {
public:
    explicit HookGrid(const Partition& alpha);

    int rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int i) const { return static_cast<int>(rows_[i - 1].size()); }
    int at(int i, int j) const { return rows_[i - 1][j - 1]; } // 1-based
    const std::vector<std::vector<int>>& row_data() const { return rows_; }

    // Sorted ascending; has exactly n entries.
    const std::vector<int>& hook_multiset() const { return multiset_; }
    int max_hook() const { return multiset_.empty() ? 0 : multiset_.back(); }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> multiset_;
};

inline HookGrid hook_grid(const Partition& alpha) { return HookGrid(alpha); }

// Nodes whose hook length equals k, ordered by row then column.
std::vector<Node> hooks_of_length(const Partition& alpha, int k);

struct RimRemoval {
    Partition remaining; // partition of n - h(node)
    int leg = 0;         // alpha^T_col - row; controls the MN sign
};

// Removes the rim of the hook at `node`; domain_error if the node is not a
// cell of the diagram.
RimRemoval remove_rim_hook(const Partition& alpha, Node node);

// Number of hook lengths divisible by h, which equals the maximum number of
// h-hooks that can be removed recursively.
int h_weight(const Partition& alpha, int h);

} // namespace symchar
