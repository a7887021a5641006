#ifndef W4_CUTS_HPP
#define W4_CUTS_HPP

#include <vector>

#include "w4/multigraph.hpp"

namespace w4 {

struct EdgeCut {
    std::vector<int> edges;  // sorted edge indices
    VertexSet side;          // the side not containing the designated root
    bool minimal = false;
    bool internal = false;
    int order() const { return static_cast<int>(edges.size()); }
};

struct FlowResult {
    int value = 0;
    std::vector<std::vector<int>> paths; // edge-index sequences, pairwise edge-disjoint
};

/// Maximum number of pairwise edge-disjoint a-b paths, with witnesses.
FlowResult max_edge_flow(const Multigraph& g, const VertexSet& a, const VertexSet& b);

/// Minimum a-b edge cut; side is the part not reachable from a.
/// Returns an order-0 sentinel (empty edges) when a and b are already separated.
EdgeCut min_edge_cut(const Multigraph& g, const VertexSet& a, const VertexSet& b);

/// Every minimal edge cut of order <= max_order (<= 3) whose two sides
/// both have >= 2 vertices; exhaustive, deduplicated, sorted by
/// (order, edge list). side is the part not containing the smallest-id
/// vertex of the containing component.
std::vector<EdgeCut> enumerate_internal_cuts(const Multigraph& g, int max_order);

bool is_internally_k_edge_connected(const Multigraph& g, int k);

struct ImportantSeparator {
    std::vector<int> edges;  // sorted edge indices
    VertexSet reachable;     // vertices reachable from X once edges are removed
    int order() const { return static_cast<int>(edges.size()); }
};

/// All important (x, y)-edge-separators of size <= k, sorted by
/// (order, edge list). Count is bounded by 4^k.
std::vector<ImportantSeparator> enumerate_important_separators(
    const Multigraph& g, const VertexSet& x, const VertexSet& y, int k);

/// Vertices reachable from x in g with the given edges removed.
VertexSet reachable_set(const Multigraph& g, const VertexSet& x,
                        const std::vector<int>& removed_edges);

} // namespace w4

#endif
