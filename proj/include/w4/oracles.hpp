#ifndef W4_ORACLES_HPP
#define W4_ORACLES_HPP

#include <optional>
#include <vector>

#include "w4/cuts.hpp"
#include "w4/immersion.hpp"
#include "w4/multigraph.hpp"

// Brute-force reference implementations used to cross-check the search
// engines. Kept deliberately naive and independent of the algorithmic
// code paths they validate: plain exhaustive enumeration only.
namespace w4::oracle {

/// Max edge-disjoint a-b path packing by exhaustive search over path sets.
int max_flow_by_packing(const Multigraph& g, const VertexSet& a, const VertexSet& b);

/// Min a-b cut by trying all edge subsets in increasing size.
int min_cut_by_subsets(const Multigraph& g, const VertexSet& a, const VertexSet& b);

/// Internal cuts found by enumerating vertex 2-partitions of each component.
std::vector<std::vector<int>> internal_cuts_by_partitions(const Multigraph& g,
                                                          int max_order);

/// Important separators straight from the definition, over all edge
/// subsets of size <= k.
struct SeparatorWitness {
    std::vector<int> edges;
    VertexSet reachable;
};
std::vector<SeparatorWitness> important_separators_by_subsets(
    const Multigraph& g, const VertexSet& x, const VertexSet& y, int k);

/// Immersion by enumerating every injective vertex map and exhaustively
/// packing edge-disjoint paths, with no pruning or symmetry breaking.
std::optional<ImmersionModel> find_immersion_exhaustive(const Multigraph& g,
                                                        const Multigraph& h);

/// Treewidth by trying every elimination order (n <= 8).
int treewidth_by_orders(const Multigraph& g);

} // namespace w4::oracle

#endif
