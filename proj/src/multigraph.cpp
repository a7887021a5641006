#include "w4/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace w4 {

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::stable_sort(edges_.begin(), edges_.end());
    incidence_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i) {
        incidence_[edges_[i].first].push_back(i);
        incidence_[edges_[i].second].push_back(i);
    }
}

const std::vector<int>& Multigraph::incident_edges(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("invalid vertex id");
    return incidence_[v];
}

int Multigraph::degree(int v) const {
    return static_cast<int>(incident_edges(v).size());
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Multigraph::other_end(int e, int v) const {
    auto [a, b] = edge(e);
    if (v == a) return b;
    if (v == b) return a;
    throw std::invalid_argument("vertex not an endpoint of edge");
}

int boundary(const Multigraph& g, const VertexSet& s) {
    if (s.size() != g.vertex_count())
        throw std::invalid_argument("vertex set size mismatch");
    int inside = s.count();
    if (inside == 0 || inside == g.vertex_count())
        throw std::invalid_argument("boundary needs a proper non-empty set");
    int c = 0;
    for (auto [u, v] : g.edges())
        if (s.test(u) != s.test(v)) ++c;
    return c;
}

std::vector<VertexSet> components(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        VertexSet part(n);
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        part.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges(v)) {
                int w = g.other_end(e, v);
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    part.set(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(part));
    }
    return out;
}

int component_count(const Multigraph& g) {
    return static_cast<int>(components(g).size());
}

VertexSet component_of(const Multigraph& g, int v) {
    for (auto& c : components(g))
        if (c.test(v)) return c;
    throw std::invalid_argument("invalid vertex id");
}

EdgeDeletion delete_edges(const Multigraph& g, const EdgeSet& f) {
    if (f.size() != g.edge_count())
        throw std::invalid_argument("edge set size mismatch");
    std::vector<std::pair<int, int>> kept;
    std::vector<int> edge_map(g.edge_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (f.test(i)) continue;
        edge_map[i] = static_cast<int>(kept.size());
        kept.push_back(g.edge(i));
    }
    // surviving edges keep relative canonical order, so indices stay canonical
    return {Multigraph(g.vertex_count(), std::move(kept)), std::move(edge_map)};
}

VertexDeletion delete_vertex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("invalid vertex id");
    std::vector<int> vmap(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        vmap[i] = i < v ? i : (i == v ? -1 : i - 1);
    std::vector<std::pair<int, int>> kept;
    std::vector<int> edge_map(g.edge_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge(i);
        if (a == v || b == v) continue;
        edge_map[i] = static_cast<int>(kept.size());
        kept.emplace_back(vmap[a], vmap[b]);
    }
    return {Multigraph(g.vertex_count() - 1, std::move(kept)),
            std::move(vmap), std::move(edge_map)};
}

Multigraph lift(const Multigraph& g, int e1, int e2) {
    if (e1 == e2) throw std::invalid_argument("lift needs two distinct edges");
    auto [a, b] = g.edge(e1);
    auto [c, d] = g.edge(e2);
    int shared = -1;
    if (a == c || a == d) shared = a;
    if (b == c || b == d) {
        if (shared != -1) throw std::invalid_argument("lift would create a self-loop");
        shared = b;
    }
    if (shared == -1) throw std::invalid_argument("edges share no endpoint");
    int x = a == shared ? b : a;
    int y = c == shared ? d : c;
    if (x == y) throw std::invalid_argument("lift would create a self-loop");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e1 && i != e2) edges.push_back(g.edge(i));
    edges.emplace_back(x, y);
    return Multigraph(g.vertex_count(), std::move(edges));
}

bool is_subcubic(const Multigraph& g) { return g.max_degree() <= 3; }

namespace {

// multiplicity of pair (u, v) as a sorted map for fast iso checks
std::vector<std::vector<std::pair<int, int>>> adjacency_mult(const Multigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        auto bump = [](std::vector<std::pair<int, int>>& row, int w) {
            for (auto& [x, m] : row)
                if (x == w) { ++m; return; }
            row.emplace_back(w, 1);
        };
        bump(adj[u], v);
        bump(adj[v], u);
    }
    return adj;
}

int multiplicity(const std::vector<std::pair<int, int>>& row, int w) {
    for (auto [x, m] : row)
        if (x == w) return m;
    return 0;
}

struct IsoCtx {
    const std::vector<std::vector<std::pair<int, int>>>* adj1;
    const std::vector<std::vector<std::pair<int, int>>>* adj2;
    std::vector<int> deg1, deg2;
    std::vector<int> map;    // g1 -> g2
    std::vector<bool> used;  // g2
    long nodes = 0;
    long budget;
};

bool iso_extend(IsoCtx& c, int v) {
    int n = static_cast<int>(c.map.size());
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (c.used[w] || c.deg1[v] != c.deg2[w]) continue;
        if (++c.nodes > c.budget)
            throw std::runtime_error("isomorphism node budget exceeded");
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            ok = multiplicity((*c.adj1)[v], u) == multiplicity((*c.adj2)[w], c.map[u]);
        if (!ok) continue;
        c.map[v] = w;
        c.used[w] = true;
        if (iso_extend(c, v + 1)) return true;
        c.used[w] = false;
        c.map[v] = -1;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Multigraph& g1, const Multigraph& g2, long node_budget) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    auto degs = [](const Multigraph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g1) != degs(g2)) return false;
    auto mults = [](const Multigraph& g) {
        std::vector<int> m;
        auto es = g.edges();
        for (size_t i = 0; i < es.size();) {
            size_t j = i;
            while (j < es.size() && es[j] == es[i]) ++j;
            m.push_back(static_cast<int>(j - i));
            i = j;
        }
        std::sort(m.begin(), m.end());
        return m;
    };
    if (mults(g1) != mults(g2)) return false;

    auto adj1 = adjacency_mult(g1), adj2 = adjacency_mult(g2);
    auto dvec = [](const Multigraph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        return d;
    };
    IsoCtx c{&adj1, &adj2, dvec(g1), dvec(g2),
             std::vector<int>(g1.vertex_count(), -1),
             std::vector<bool>(g1.vertex_count(), false), 0, node_budget};
    return iso_extend(c, 0);
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph simplify(const Multigraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges())
        if (edges.empty() || edges.back() != e) edges.push_back(e);
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
    return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

} // namespace w4
