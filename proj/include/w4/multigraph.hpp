#ifndef W4_MULTIGRAPH_HPP
#define W4_MULTIGRAPH_HPP

#include <utility>
#include <vector>
#include <stdexcept>

#include "w4/bitset.hpp"

namespace w4 {

/// Loop-free undirected multigraph. Vertices are ids 0..n-1; parallel
/// edges are stored as repeated endpoint pairs with stable indices.
/// Edges are kept in canonical order: each pair normalized to (u, v)
/// with u < v, the list sorted by (u, v). Values are immutable after
/// construction; operations that change a graph return a new one.
class Multigraph {
public:
    Multigraph() : n_(0) {}
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int i) const { return edges_.at(i); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Edge indices incident to v, in increasing order.
    const std::vector<int>& incident_edges(int v) const;

    int degree(int v) const;
    int max_degree() const;

    /// The endpoint of edge e that is not v. Throws if v is not an endpoint.
    int other_end(int e, int v) const;

    bool operator==(const Multigraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// ∂(S): edges with exactly one endpoint in s. Throws if s is empty or full.
int boundary(const Multigraph& g, const VertexSet& s);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Multigraph& g);

int component_count(const Multigraph& g);

/// Component containing v.
VertexSet component_of(const Multigraph& g, int v);

struct EdgeDeletion {
    Multigraph graph;
    std::vector<int> edge_map; // old edge index -> new index, -1 if deleted
};
EdgeDeletion delete_edges(const Multigraph& g, const EdgeSet& f);

struct VertexDeletion {
    Multigraph graph;
    std::vector<int> vertex_map; // old vertex id -> new id, -1 for deleted
    std::vector<int> edge_map;   // old edge index -> new index, -1 if deleted
};
VertexDeletion delete_vertex(const Multigraph& g, int v);

/// Split-off: replace edges e1, e2 sharing exactly one endpoint w by a
/// single edge between their other endpoints x, y (x != y).
Multigraph lift(const Multigraph& g, int e1, int e2);

bool is_subcubic(const Multigraph& g);

/// Multiplicity-preserving isomorphism test. Exact; intended for n <= 12.
/// Throws std::runtime_error if the node budget is exhausted.
bool is_isomorphic(const Multigraph& g1, const Multigraph& g2,
                   long node_budget = 20'000'000);

/// Relabel vertices: new id of v is perm[v]. perm must be a permutation.
Multigraph relabel(const Multigraph& g, const std::vector<int>& perm);

/// Parallel edges collapsed to multiplicity 1.
Multigraph simplify(const Multigraph& g);

/// Disjoint union; vertices of b shifted by a.vertex_count().
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

} // namespace w4

#endif
