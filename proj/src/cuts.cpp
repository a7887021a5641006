#include "w4/cuts.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace w4 {

namespace {

// Unit-capacity flow over the undirected multigraph. Each edge carries at
// most one unit, in either direction: state 0 = unused, +1 = flow from the
// canonical low endpoint to the high one, -1 = the reverse. Edges flagged
// in `removed` do not exist. Terminal sets act as infinite super-terminals.
struct FlowState {
    const Multigraph& g;
    EdgeSet removed;
    std::vector<int8_t> state;

    FlowState(const Multigraph& graph, EdgeSet removed_edges)
        : g(graph), removed(std::move(removed_edges)),
          state(graph.edge_count(), 0) {}

    // residual arc from v over edge e; returns target or -1
    int residual_target(int v, int e) const {
        if (removed.test(e)) return -1;
        auto [a, b] = g.edge(e);
        int w = v == a ? b : a;
        if (state[e] == 0) return w;
        // cancelling: traversable only against the flow direction
        int head = state[e] == 1 ? b : a;
        return v == head ? w : -1;
    }

    void push(int v, int e) { // send one unit from v over e
        auto [a, b] = g.edge(e);
        if (state[e] == 0)
            state[e] = v == a ? 1 : -1;
        else
            state[e] = 0; // cancellation
    }

    // one augmenting path from a-set to b-set; false when none exists
    bool augment(const VertexSet& a, const VertexSet& b) {
        int n = g.vertex_count();
        std::vector<std::pair<int, int>> parent(n, {-1, -1}); // (vertex, edge)
        std::vector<bool> seen(n, false);
        std::deque<int> queue;
        for (int v = 0; v < n; ++v)
            if (a.test(v)) { seen[v] = true; queue.push_back(v); }
        int hit = -1;
        while (!queue.empty() && hit == -1) {
            int v = queue.front();
            queue.pop_front();
            for (int e : g.incident_edges(v)) {
                int w = residual_target(v, e);
                if (w == -1 || seen[w]) continue;
                seen[w] = true;
                parent[w] = {v, e};
                if (b.test(w)) { hit = w; break; }
                queue.push_back(w);
            }
        }
        if (hit == -1) return false;
        // a-vertices are BFS roots and never receive parents
        for (int v = hit; parent[v].first != -1;) {
            auto [pv, pe] = parent[v];
            push(pv, pe);
            v = pv;
        }
        return true;
    }

    // vertices reachable from the a-set in the residual graph
    VertexSet residual_reach(const VertexSet& a) const {
        VertexSet r(g.vertex_count());
        std::vector<int> stack;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (a.test(v)) { r.set(v); stack.push_back(v); }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges(v)) {
                int w = residual_target(v, e);
                if (w != -1 && !r.test(w)) { r.set(w); stack.push_back(w); }
            }
        }
        return r;
    }

    // vertices that can reach the b-set in the residual graph
    VertexSet residual_coreach(const VertexSet& b) const {
        VertexSet t(g.vertex_count());
        std::vector<int> stack;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (b.test(v)) { t.set(v); stack.push_back(v); }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            // u can reach v if there is a residual arc u -> v over e
            for (int e : g.incident_edges(v)) {
                int u = g.other_end(e, v);
                if (t.test(u)) continue;
                if (residual_target(u, e) == v) { t.set(u); stack.push_back(u); }
            }
        }
        return t;
    }
};

void check_terminals(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.size() != g.vertex_count() || b.size() != g.vertex_count())
        throw std::invalid_argument("terminal set size mismatch");
    if (!a.any() || !b.any())
        throw std::invalid_argument("terminal sets must be non-empty");
    if (a.intersects(b))
        throw std::invalid_argument("terminal sets must be disjoint");
}

int run_flow(FlowState& fs, const VertexSet& a, const VertexSet& b) {
    int value = 0;
    while (fs.augment(a, b)) ++value;
    return value;
}

// decompose the used edges into `value` a->b paths (cycles are dropped)
std::vector<std::vector<int>> extract_paths(const FlowState& fs,
                                            const VertexSet& a,
                                            const VertexSet& b) {
    const Multigraph& g = fs.g;
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> out(n); // tail -> (edge, head)
    std::vector<int> in_deg(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (fs.state[e] == 0) continue;
        auto [u, v] = g.edge(e);
        int tail = fs.state[e] == 1 ? u : v;
        int head = fs.state[e] == 1 ? v : u;
        out[tail].emplace_back(e, head);
        ++in_deg[head];
    }
    std::vector<std::vector<int>> paths;
    for (int s = 0; s < n; ++s) {
        if (!a.test(s)) continue;
        int starts = static_cast<int>(out[s].size()) - in_deg[s];
        for (int k = 0; k < starts; ++k) {
            std::vector<int> path_edges;
            std::vector<int> path_verts{s};
            int v = s;
            while (!b.test(v) || path_edges.empty()) {
                if (out[v].empty()) throw std::logic_error("flow walk stuck");
                auto [e, w] = out[v].back();
                out[v].pop_back();
                path_edges.push_back(e);
                // excise a closed sub-walk when a vertex repeats
                auto it = std::find(path_verts.begin(), path_verts.end(), w);
                if (it != path_verts.end()) {
                    size_t keep = it - path_verts.begin();
                    path_verts.resize(keep + 1);
                    path_edges.resize(keep);
                } else {
                    path_verts.push_back(w);
                }
                v = w;
                if (b.test(v)) break;
            }
            paths.push_back(std::move(path_edges));
        }
    }
    return paths;
}

bool increases_components(const Multigraph& g, const std::vector<int>& f,
                          int base_components) {
    EdgeSet mask(g.edge_count());
    for (int e : f) mask.set(e);
    return component_count(delete_edges(g, mask).graph) > base_components;
}

} // namespace

VertexSet reachable_set(const Multigraph& g, const VertexSet& x,
                        const std::vector<int>& removed_edges) {
    EdgeSet removed(g.edge_count());
    for (int e : removed_edges) removed.set(e);
    VertexSet r(g.vertex_count());
    std::vector<int> stack;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (x.test(v)) { r.set(v); stack.push_back(v); }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            if (removed.test(e)) continue;
            int w = g.other_end(e, v);
            if (!r.test(w)) { r.set(w); stack.push_back(w); }
        }
    }
    return r;
}

FlowResult max_edge_flow(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    check_terminals(g, a, b);
    FlowState fs(g, EdgeSet(g.edge_count()));
    FlowResult res;
    res.value = run_flow(fs, a, b);
    res.paths = extract_paths(fs, a, b);
    return res;
}

EdgeCut min_edge_cut(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    check_terminals(g, a, b);
    FlowState fs(g, EdgeSet(g.edge_count()));
    int value = run_flow(fs, a, b);
    EdgeCut cut;
    if (value == 0) {
        // sentinel: a and b already separated
        cut.side = ~reachable_set(g, a, {});
        return cut;
    }
    VertexSet reach = fs.residual_reach(a);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (reach.test(u) != reach.test(v)) cut.edges.push_back(e);
    }
    cut.side = ~reach;
    // minimality as an a-b separator: every edge is needed
    cut.minimal = true;
    for (size_t i = 0; i < cut.edges.size() && cut.minimal; ++i) {
        std::vector<int> sub = cut.edges;
        sub.erase(sub.begin() + i);
        if (!reachable_set(g, a, sub).intersects(b)) cut.minimal = false;
    }
    return cut;
}

std::vector<EdgeCut> enumerate_internal_cuts(const Multigraph& g, int max_order) {
    if (max_order < 0) throw std::invalid_argument("max_order must be >= 0");
    std::vector<EdgeCut> out;
    int m = g.edge_count();
    int n = g.vertex_count();
    auto comps = components(g);
    std::vector<int> comp_of(n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c].to_list()) comp_of[v] = static_cast<int>(c);
    int base = static_cast<int>(comps.size());

    std::vector<int> chosen;
    auto consider = [&](const std::vector<int>& f) {
        int c0 = comp_of[g.edge(f[0]).first];
        for (int e : f)
            if (comp_of[g.edge(e).first] != c0) return;
        EdgeSet mask(m);
        for (int e : f) mask.set(e);
        Multigraph cutg = delete_edges(g, mask).graph;
        auto new_comps = components(cutg);
        if (static_cast<int>(new_comps.size()) != base + 1) return;
        // minimality: no maximal proper subset disconnects
        for (size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + i);
            if (!sub.empty() && increases_components(g, sub, base)) return;
        }
        // internality: both halves of the split component have >= 2 vertices
        std::vector<const VertexSet*> halves;
        for (auto& nc : new_comps)
            if (nc.subset_of(comps[c0]) && nc != comps[c0]) halves.push_back(&nc);
        if (halves.size() != 2) return;
        if (halves[0]->count() < 2 || halves[1]->count() < 2) return;
        int root = comps[c0].to_list().front();
        EdgeCut cut;
        cut.edges = f;
        cut.side = halves[0]->test(root) ? *halves[1] : *halves[0];
        cut.minimal = true;
        cut.internal = true;
        out.push_back(std::move(cut));
    };

    // lexicographic subsets of each size keep the output deterministic
    std::function<void(int, int)> rec = [&](int start, int want) {
        if (want == 0) {
            consider(chosen);
            return;
        }
        for (int e = start; e <= m - want; ++e) {
            chosen.push_back(e);
            rec(e + 1, want - 1);
            chosen.pop_back();
        }
    };
    for (int size = 1; size <= max_order; ++size) rec(0, size);
    return out;
}

bool is_internally_k_edge_connected(const Multigraph& g, int k) {
    if (k <= 1) return true;
    return enumerate_internal_cuts(g, k - 1).empty();
}

namespace {

struct ImpSepSearch {
    const Multigraph& g;
    const VertexSet& y;
    int k;
    std::vector<std::vector<int>> candidates;

    void branch(VertexSet x, EdgeSet removed, int k_rem) {
        FlowState fs(g, removed);
        int lambda = run_flow(fs, x, y);
        if (lambda > k_rem) return;
        if (lambda == 0) {
            candidates.push_back(removed.to_list());
            return;
        }
        // farthest minimum cut: source side of the residual co-reach complement
        VertexSet t = fs.residual_coreach(y);
        std::vector<int> cut;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (removed.test(e)) continue;
            auto [u, v] = g.edge(e);
            if (t.test(u) != t.test(v)) cut.push_back(e);
        }
        EdgeSet with_cut = removed;
        for (int e : cut) with_cut.set(e);
        candidates.push_back(with_cut.to_list());

        int e = cut.front();
        auto [u, v] = g.edge(e);
        int far_end = t.test(u) ? u : v; // endpoint on the y side of the cut
        VertexSet grown = x | (~t);
        if (k_rem >= 1) {
            EdgeSet r2 = removed;
            r2.set(e);
            branch(grown, r2, k_rem - 1);
        }
        VertexSet grown2 = grown;
        grown2.set(far_end);
        if (!grown2.intersects(y)) branch(grown2, removed, k_rem);
    }
};

} // namespace

std::vector<ImportantSeparator> enumerate_important_separators(
    const Multigraph& g, const VertexSet& x, const VertexSet& y, int k) {
    check_terminals(g, x, y);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    ImpSepSearch search{g, y, k, {}};
    search.branch(x, EdgeSet(g.edge_count()), k);

    std::sort(search.candidates.begin(), search.candidates.end());
    search.candidates.erase(
        std::unique(search.candidates.begin(), search.candidates.end()),
        search.candidates.end());

    std::vector<ImportantSeparator> out;
    for (const auto& s : search.candidates) {
        if (static_cast<int>(s.size()) > k) continue;
        VertexSet r = reachable_set(g, x, s);
        if (r.intersects(y)) continue; // not a separator
        bool minimal = true;
        for (size_t i = 0; i < s.size() && minimal; ++i) {
            std::vector<int> sub = s;
            sub.erase(sub.begin() + i);
            if (!reachable_set(g, x, sub).intersects(y)) minimal = false;
        }
        if (!minimal) continue;
        // importance: the separator must itself be the farthest minimum
        // (R, y)-cut, i.e. no same-or-smaller separator reaches further
        FlowState fs(g, EdgeSet(g.edge_count()));
        int lambda = run_flow(fs, r, y);
        if (lambda != static_cast<int>(s.size())) continue;
        VertexSet t = fs.residual_coreach(y);
        std::vector<int> far_cut;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if (t.test(u) != t.test(v)) far_cut.push_back(e);
        }
        if (reachable_set(g, x, far_cut) != r) continue;
        out.push_back({s, std::move(r)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.edges.size(), a.edges) <
               std::make_pair(b.edges.size(), b.edges);
    });
    return out;
}

} // namespace w4
