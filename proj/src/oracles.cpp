#include "w4/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace w4::oracle {

namespace {

std::vector<bool> bfs_reach(const Multigraph& g, const VertexSet& from,
                            const std::vector<bool>& edge_removed) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (from.test(v)) { seen[v] = true; stack.push_back(v); }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            if (edge_removed[e]) continue;
            int w = g.other_end(e, v);
            if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
    }
    return seen;
}

bool separates(const Multigraph& g, const VertexSet& a, const VertexSet& b,
               const std::vector<bool>& removed) {
    auto seen = bfs_reach(g, a, removed);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (b.test(v) && seen[v]) return false;
    return true;
}

// every edge-simple a->b path in the currently available edges
void all_paths(const Multigraph& g, const VertexSet& b, int cur,
               std::vector<bool>& avail, std::vector<int>& path,
               std::vector<std::vector<int>>& out) {
    if (b.test(cur) && !path.empty()) {
        out.push_back(path);
        return;
    }
    for (int e : g.incident_edges(cur)) {
        if (!avail[e]) continue;
        avail[e] = false;
        path.push_back(e);
        all_paths(g, b, g.other_end(e, cur), avail, path, out);
        path.pop_back();
        avail[e] = true;
    }
}

int pack(const Multigraph& g, const VertexSet& a, const VertexSet& b,
         std::vector<bool>& avail) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!a.test(v)) continue;
        std::vector<std::vector<int>> paths;
        std::vector<int> path;
        all_paths(g, b, v, avail, path, paths);
        for (const auto& p : paths) {
            for (int e : p) avail[e] = false;
            best = std::max(best, 1 + pack(g, a, b, avail));
            for (int e : p) avail[e] = true;
        }
    }
    return best;
}

void subsets_of_size(int m, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> chosen;
    std::function<void(int, int)> rec = [&](int start, int want) {
        if (want == 0) { fn(chosen); return; }
        for (int e = start; e <= m - want; ++e) {
            chosen.push_back(e);
            rec(e + 1, want - 1);
            chosen.pop_back();
        }
    };
    rec(0, size);
}

} // namespace

int max_flow_by_packing(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<bool> avail(g.edge_count(), true);
    return pack(g, a, b, avail);
}

int min_cut_by_subsets(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    int m = g.edge_count();
    for (int size = 0; size <= m; ++size) {
        bool found = false;
        subsets_of_size(m, size, [&](const std::vector<int>& s) {
            if (found) return;
            std::vector<bool> removed(m, false);
            for (int e : s) removed[e] = true;
            if (separates(g, a, b, removed)) found = true;
        });
        if (found) return size;
    }
    return m + 1; // unreachable for disjoint a, b
}

std::vector<std::vector<int>> internal_cuts_by_partitions(const Multigraph& g,
                                                          int max_order) {
    std::set<std::vector<int>> found;
    std::vector<bool> none(g.edge_count(), false);
    for (const auto& comp : components(g)) {
        auto verts = comp.to_list();
        int k = static_cast<int>(verts.size());
        if (k < 4) continue;
        for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << k); ++mask) {
            VertexSet s(g.vertex_count());
            for (int i = 0; i < k; ++i)
                if (mask & (uint32_t(1) << i)) s.set(verts[i]);
            int inside = s.count();
            if (inside < 2 || k - inside < 2) continue;
            std::vector<int> crossing;
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.edge(e);
                if (!comp.test(u)) continue;
                if (s.test(u) != s.test(v)) crossing.push_back(e);
            }
            if (crossing.empty() ||
                static_cast<int>(crossing.size()) > max_order)
                continue;
            // both sides must be connected for a minimal cut
            VertexSet rest = comp.minus(s);
            VertexSet s_seed(g.vertex_count()), r_seed(g.vertex_count());
            s_seed.set(s.to_list().front());
            r_seed.set(rest.to_list().front());
            std::vector<bool> removed(g.edge_count(), false);
            for (int e : crossing) removed[e] = true;
            auto from_s = bfs_reach(g, s_seed, removed);
            auto from_r = bfs_reach(g, r_seed, removed);
            bool ok = true;
            for (int v : s.to_list()) ok = ok && from_s[v];
            for (int v : rest.to_list()) ok = ok && from_r[v];
            if (ok) found.insert(crossing);
        }
    }
    return {found.begin(), found.end()};
}

std::vector<SeparatorWitness> important_separators_by_subsets(
    const Multigraph& g, const VertexSet& x, const VertexSet& y, int k) {
    int m = g.edge_count();
    struct Entry {
        std::vector<int> edges;
        VertexSet reach;
    };
    std::vector<Entry> separators;
    for (int size = 0; size <= std::min(k, m); ++size) {
        subsets_of_size(m, size, [&](const std::vector<int>& s) {
            std::vector<bool> removed(m, false);
            for (int e : s) removed[e] = true;
            if (!separates(g, x, y, removed)) return;
            auto seen = bfs_reach(g, x, removed);
            VertexSet r(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                if (seen[v]) r.set(v);
            separators.push_back({s, std::move(r)});
        });
    }
    std::vector<SeparatorWitness> out;
    for (const auto& cand : separators) {
        bool minimal = true;
        for (size_t i = 0; i < cand.edges.size() && minimal; ++i) {
            std::vector<bool> removed(m, false);
            for (size_t j = 0; j < cand.edges.size(); ++j)
                if (j != i) removed[cand.edges[j]] = true;
            if (separates(g, x, y, removed)) minimal = false;
        }
        if (!minimal) continue;
        bool important = true;
        for (const auto& other : separators) {
            if (other.edges.size() > cand.edges.size()) continue;
            // strictly larger reachable set dominates
            if (other.reach != cand.reach && cand.reach.subset_of(other.reach)) {
                important = false;
                break;
            }
        }
        if (important) out.push_back({cand.edges, cand.reach});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.edges.size(), a.edges) <
               std::make_pair(b.edges.size(), b.edges);
    });
    return out;
}

namespace {

bool pack_h_edges(const Multigraph& g, const Multigraph& h,
                  const std::vector<int>& vmap, size_t he,
                  std::vector<bool>& used,
                  std::vector<std::vector<int>>& routed) {
    if (he == static_cast<size_t>(h.edge_count())) return true;
    auto [hu, hv] = h.edge(static_cast<int>(he));
    int target = vmap[hv];
    std::function<bool(int, std::vector<int>&)> walk =
        [&](int cur, std::vector<int>& path) -> bool {
        if (cur == target && !path.empty()) {
            routed[he] = path;
            if (pack_h_edges(g, h, vmap, he + 1, used, routed)) return true;
            routed[he].clear();
            return false;
        }
        for (int e : g.incident_edges(cur)) {
            if (used[e]) continue;
            used[e] = true;
            path.push_back(e);
            if (walk(g.other_end(e, cur), path)) return true;
            path.pop_back();
            used[e] = false;
        }
        return false;
    };
    std::vector<int> path;
    return walk(vmap[hu], path);
}

} // namespace

std::optional<ImmersionModel> find_immersion_exhaustive(const Multigraph& g,
                                                        const Multigraph& h) {
    int k = h.vertex_count();
    std::vector<int> vmap(k, -1);
    std::vector<bool> taken(g.vertex_count(), false);
    std::optional<ImmersionModel> result;
    std::function<bool(int)> choose = [&](int hv) -> bool {
        if (hv == k) {
            std::vector<bool> used(g.edge_count(), false);
            std::vector<std::vector<int>> routed(h.edge_count());
            if (pack_h_edges(g, h, vmap, 0, used, routed)) {
                result = ImmersionModel{vmap, routed};
                return true;
            }
            return false;
        }
        for (int gv = 0; gv < g.vertex_count(); ++gv) {
            if (taken[gv]) continue;
            taken[gv] = true;
            vmap[hv] = gv;
            if (choose(hv + 1)) return true;
            taken[gv] = false;
            vmap[hv] = -1;
        }
        return false;
    };
    choose(0);
    return result;
}

int treewidth_by_orders(const Multigraph& g) {
    Multigraph s = simplify(g);
    int n = s.vertex_count();
    if (n > 8) throw std::invalid_argument("treewidth_by_orders: n > 8");
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<std::set<int>> adj(n);
        for (auto [u, v] : s.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        int width = 0;
        std::vector<bool> gone(n, false);
        for (int v : order) {
            std::vector<int> nb;
            for (int w : adj[v])
                if (!gone[w]) nb.push_back(w);
            width = std::max(width, static_cast<int>(nb.size()));
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    adj[nb[i]].insert(nb[j]);
                    adj[nb[j]].insert(nb[i]);
                }
            gone[v] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace w4::oracle
