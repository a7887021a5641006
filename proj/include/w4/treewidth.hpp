#ifndef W4_TREEWIDTH_HPP
#define W4_TREEWIDTH_HPP

#include <vector>

#include "w4/multigraph.hpp"

namespace w4 {

struct TreewidthResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<int> elimination_order; // witnesses the upper bound
};

/// Exact treewidth of the underlying simple graph (parallel edges never
/// change treewidth) via elimination-order dynamic programming over
/// vertex subsets. Throws std::invalid_argument above 20 vertices.
TreewidthResult treewidth_exact(const Multigraph& g);

/// Heuristic bracket: greedy elimination (best of min-degree and min-fill)
/// for the upper bound, degeneracy for the lower bound.
TreewidthResult treewidth_bounds(const Multigraph& g);

/// Width of a concrete elimination order on the underlying simple graph.
int elimination_width(const Multigraph& g, const std::vector<int>& order);

} // namespace w4

#endif
