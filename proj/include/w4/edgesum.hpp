#ifndef W4_EDGESUM_HPP
#define W4_EDGESUM_HPP

#include <memory>
#include <optional>
#include <vector>

#include "w4/cuts.hpp"
#include "w4/multigraph.hpp"
#include "w4/tribool.hpp"

namespace w4 {

/// Glue g1 and g2: delete hub vertices v1, v2 (both of degree t = |pi|)
/// and join their stub edges pairwise. pi lists (g1-stub, g2-stub)
/// positions into incident_edges(v1) / incident_edges(v2).
Multigraph compose(const Multigraph& g1, int v1, const Multigraph& g2, int v2,
                   const std::vector<std::pair<int, int>>& pi);

struct SplitParts {
    Multigraph g1;
    int v1; // fresh hub, largest id in g1
    Multigraph g2;
    int v2;
    std::vector<std::pair<int, int>> pi;
    std::vector<int> side1; // parent vertex ids of g1's non-hub vertices, in id order
    std::vector<int> side2;
};

/// Inverse of compose along an internal cut of a connected graph.
/// compose(result) relabeled by (side1 ++ side2) reproduces g exactly.
SplitParts split(const Multigraph& g, const EdgeCut& cut);

struct DecompositionNode {
    // leaf
    std::optional<Multigraph> prime;
    // internal node
    int t = 0;
    std::vector<int> cut_edges; // indices in this node's graph
    std::vector<std::pair<int, int>> pi;
    int v1 = -1, v2 = -1;
    std::vector<int> relabel; // compose-output vertex id -> this node's id
    std::unique_ptr<DecompositionNode> left, right;

    bool is_leaf() const { return prime.has_value(); }
};

using DecompositionTree = std::unique_ptr<DecompositionNode>;

/// Repeatedly split a connected graph along its smallest internal cut of
/// order <= 3 (lexicographic tie-break) until every leaf is prime.
DecompositionTree decompose_tree(const Multigraph& g);

/// Exact inverse: returns the very graph the node was built from.
Multigraph recompose(const DecompositionNode& node);

void collect_primes(const DecompositionNode& node,
                    std::vector<const Multigraph*>& out);

struct DecompositionForest {
    std::vector<DecompositionTree> trees; // one per connected component
};

DecompositionForest decompose(const Multigraph& g);

/// Disjoint union of the recomposed components; isomorphic to the input.
Multigraph recompose(const DecompositionForest& forest);

std::vector<const Multigraph*> primes(const DecompositionForest& forest);

struct InvarianceReport {
    int t = 0;
    TriBool g1_w4 = TriBool::Unknown;
    TriBool g2_w4 = TriBool::Unknown;
    TriBool composition_w4 = TriBool::Unknown;
    TriBool iff_holds = TriBool::Unknown; // composition_w4 <=> g1_w4 or g2_w4
    TriBool g1_immersed = TriBool::Unknown; // find_immersion(comp, g1), t <= 3 only
    TriBool g2_immersed = TriBool::Unknown;
};

/// Composes the parts and compares W4 containment of the whole against the
/// parts. For t <= 3 and small sizes additionally checks that each part
/// immerses in the composition. At t >= 4 a failing iff is a valid outcome.
InvarianceReport check_invariance(const Multigraph& g1, int v1,
                                  const Multigraph& g2, int v2,
                                  const std::vector<std::pair<int, int>>& pi,
                                  long node_budget = 1'000'000,
                                  bool check_part_immersion = true);

} // namespace w4

#endif
