#include "w4/immersion.hpp"

#include <algorithm>
#include <numeric>

#include "w4/generators.hpp"

namespace w4 {

namespace {

bool walk_matches(const Multigraph& g, const std::vector<int>& edges,
                  int from, int to) {
    int cur = from;
    for (int e : edges) {
        auto [a, b] = g.edge(e);
        if (cur == a) cur = b;
        else if (cur == b) cur = a;
        else return false;
    }
    return cur == to;
}

} // namespace

bool verify_model(const Multigraph& g, const Multigraph& h,
                  const ImmersionModel& model, std::string* violation) {
    auto fail = [&](const char* what) {
        if (violation) *violation = what;
        return false;
    };
    if (static_cast<int>(model.vertex_map.size()) != h.vertex_count() ||
        static_cast<int>(model.edge_map.size()) != h.edge_count())
        throw std::invalid_argument("model shape does not match h");
    for (int gv : model.vertex_map)
        if (gv < 0 || gv >= g.vertex_count())
            throw std::invalid_argument("vertex_map entry out of range");
    for (const auto& path : model.edge_map)
        for (int ge : path)
            if (ge < 0 || ge >= g.edge_count())
                throw std::invalid_argument("edge_map entry out of range");

    std::vector<int> sorted = model.vertex_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("vertex_map not injective");

    for (int he = 0; he < h.edge_count(); ++he) {
        const auto& path = model.edge_map[he];
        if (path.empty()) return fail("empty path");
        auto dup = path;
        std::sort(dup.begin(), dup.end());
        if (std::adjacent_find(dup.begin(), dup.end()) != dup.end())
            return fail("path repeats an edge");
        auto [hu, hv] = h.edge(he);
        int s = model.vertex_map[hu], t = model.vertex_map[hv];
        // paths are undirected; accept either listing direction
        std::vector<int> rev(path.rbegin(), path.rend());
        if (!walk_matches(g, path, s, t) && !walk_matches(g, rev, s, t))
            return fail("path does not connect the mapped endpoints");
    }

    std::vector<int> all;
    for (const auto& path : model.edge_map)
        all.insert(all.end(), path.begin(), path.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return fail("paths share an edge");
    if (violation) violation->clear();
    return true;
}

std::vector<std::vector<int>> automorphisms(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 9) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return {id};
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    auto canon = g.edges();
    do {
        bool degs_ok = true;
        for (int v = 0; v < n && degs_ok; ++v)
            degs_ok = g.degree(v) == g.degree(perm[v]);
        if (!degs_ok) continue;
        if (relabel(g, perm).edges() == canon) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

struct BudgetExhausted {};

struct Search {
    const Multigraph& g;
    const Multigraph& h;
    long budget;
    long nodes = 0;

    std::vector<std::vector<int>> auts; // automorphisms of h
    std::vector<int> h_order;           // h vertices, decreasing degree
    std::vector<int> assign;            // h id -> g id, -1 unassigned
    std::vector<bool> g_used;

    std::vector<bool> edge_used;        // g edges consumed by routed paths
    std::vector<int> residual_deg;      // g vertex -> unused incident edges
    std::vector<int> demand;            // h vertex -> unrouted incident h-edges
    std::vector<std::vector<int>> routed; // h-edge -> path (empty = unrouted)

    std::optional<ImmersionModel> result;

    void tick() {
        if (++nodes > budget) throw BudgetExhausted{};
    }

    bool run() {
        assign.assign(h.vertex_count(), -1);
        g_used.assign(g.vertex_count(), false);
        h_order.resize(h.vertex_count());
        std::iota(h_order.begin(), h_order.end(), 0);
        std::sort(h_order.begin(), h_order.end(), [&](int a, int b) {
            if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
            return a < b;
        });
        auts = automorphisms(h);
        return assign_next(0);
    }

    bool assign_next(size_t pos) {
        if (pos == h_order.size()) {
            if (!orbit_minimal()) return false;
            return route_all();
        }
        int hv = h_order[pos];
        for (int gv = 0; gv < g.vertex_count(); ++gv) {
            if (g_used[gv] || g.degree(gv) < h.degree(hv)) continue;
            tick();
            assign[hv] = gv;
            g_used[gv] = true;
            if (assign_next(pos + 1)) return true;
            g_used[gv] = false;
            assign[hv] = -1;
        }
        return false;
    }

    // keep only the lexicographically smallest assignment in its orbit
    // under Aut(h); prunes equivalent branch placements
    bool orbit_minimal() const {
        for (const auto& sigma : auts) {
            for (int i = 0; i < h.vertex_count(); ++i) {
                int a = assign[sigma[i]], b = assign[i];
                if (a != b) {
                    if (a < b) return false;
                    break;
                }
            }
        }
        return true;
    }

    bool route_all() {
        edge_used.assign(g.edge_count(), false);
        residual_deg.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) residual_deg[v] = g.degree(v);
        demand.assign(h.vertex_count(), 0);
        for (auto [u, v] : h.edges()) { ++demand[u]; ++demand[v]; }
        routed.assign(h.edge_count(), {});
        return route(h.edge_count());
    }

    bool degree_feasible() const {
        for (int hv = 0; hv < h.vertex_count(); ++hv)
            if (residual_deg[assign[hv]] < demand[hv]) return false;
        return true;
    }

    // remaining edge-disjoint capacity between s and t, bounded by `need`
    int bounded_flow(int s, int t, int need) {
        std::vector<int8_t> dir(g.edge_count(), 0);
        int value = 0;
        while (value < need) {
            std::vector<int> parent_edge(g.vertex_count(), -1);
            std::vector<int> parent_vertex(g.vertex_count(), -1);
            std::vector<bool> seen(g.vertex_count(), false);
            std::vector<int> queue{s};
            seen[s] = true;
            bool reached = false;
            for (size_t qi = 0; qi < queue.size() && !reached; ++qi) {
                int v = queue[qi];
                for (int e : g.incident_edges(v)) {
                    if (edge_used[e]) continue;
                    auto [a, b] = g.edge(e);
                    int w = v == a ? b : a;
                    bool traversable =
                        dir[e] == 0 || (dir[e] == 1 ? v == b : v == a);
                    if (!traversable || seen[w]) continue;
                    seen[w] = true;
                    parent_edge[w] = e;
                    parent_vertex[w] = v;
                    if (w == t) { reached = true; break; }
                    queue.push_back(w);
                }
            }
            if (!reached) break;
            for (int v = t; v != s;) {
                int e = parent_edge[v], pv = parent_vertex[v];
                auto [a, b] = g.edge(e);
                if (dir[e] == 0) dir[e] = pv == a ? 1 : -1;
                else dir[e] = 0;
                v = pv;
            }
            ++value;
        }
        return value;
    }

    bool route(int remaining) {
        if (remaining == 0) {
            result = ImmersionModel{assign, routed};
            return true;
        }
        if (!degree_feasible()) return false;

        // most-constrained h-edge: smallest residual capacity around its ends
        int best = -1, best_key = 1 << 30;
        for (int he = 0; he < h.edge_count(); ++he) {
            if (!routed[he].empty()) continue;
            auto [u, v] = h.edge(he);
            int key = residual_deg[assign[u]] + residual_deg[assign[v]];
            if (key < best_key) { best_key = key; best = he; }
        }
        auto [hu, hv] = h.edge(best);
        int s = assign[hu], t = assign[hv];

        // parallel demand between this mapped pair must still be routable
        int pair_demand = 0;
        for (int he = 0; he < h.edge_count(); ++he) {
            if (!routed[he].empty()) continue;
            auto [u, v] = h.edge(he);
            if ((u == hu && v == hv) || (u == hv && v == hu)) ++pair_demand;
        }
        if (bounded_flow(s, t, pair_demand) < pair_demand) return false;

        std::vector<int> path;
        std::vector<bool> on_path(g.vertex_count(), false);
        on_path[s] = true;
        return extend_path(best, s, t, path, on_path, remaining);
    }

    // Paths are searched vertex-simple without loss: a path revisiting a
    // vertex contains a closed sub-walk whose excision leaves a valid,
    // shorter routing using a subset of the edges.
    bool extend_path(int he, int cur, int target, std::vector<int>& path,
                     std::vector<bool>& on_path, int remaining) {
        if (cur == target && !path.empty()) {
            routed[he] = path;
            auto [hu, hv] = h.edge(he);
            --demand[hu];
            --demand[hv];
            if (route(remaining - 1)) return true;
            ++demand[hu];
            ++demand[hv];
            routed[he].clear();
            return false;
        }
        int last_next = -1; // parallel copies are interchangeable: try one
        for (int e : g.incident_edges(cur)) {
            if (edge_used[e]) continue;
            int next = g.other_end(e, cur);
            if (on_path[next] || next == last_next) continue;
            last_next = next;
            tick();
            edge_used[e] = true;
            on_path[next] = true;
            --residual_deg[cur];
            --residual_deg[next];
            path.push_back(e);
            if (extend_path(he, next, target, path, on_path, remaining))
                return true;
            path.pop_back();
            ++residual_deg[cur];
            ++residual_deg[next];
            on_path[next] = false;
            edge_used[e] = false;
        }
        return false;
    }
};

// injective branch assignment with deg_g >= deg_h exists iff the sorted
// degree sequences nest; checked without search
bool degrees_admit_assignment(const Multigraph& g, const Multigraph& h) {
    std::vector<int> gd, hd;
    for (int v = 0; v < g.vertex_count(); ++v) gd.push_back(g.degree(v));
    for (int v = 0; v < h.vertex_count(); ++v) hd.push_back(h.degree(v));
    std::sort(gd.rbegin(), gd.rend());
    std::sort(hd.rbegin(), hd.rend());
    for (size_t i = 0; i < hd.size(); ++i)
        if (i >= gd.size() || gd[i] < hd[i]) return false;
    return true;
}

} // namespace

ImmersionResult find_immersion(const Multigraph& g, const Multigraph& h,
                               long node_budget) {
    ImmersionResult res;
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() ||
        !degrees_admit_assignment(g, h)) {
        res.status = SearchStatus::None;
        return res;
    }
    if (h.vertex_count() == 0) {
        res.status = SearchStatus::Found;
        res.model = ImmersionModel{{}, {}};
        return res;
    }
    Search search{g, h, node_budget};
    try {
        bool found = search.run();
        res.nodes = search.nodes;
        if (found) {
            res.status = SearchStatus::Found;
            res.model = std::move(search.result);
        } else {
            res.status = SearchStatus::None;
        }
    } catch (const BudgetExhausted&) {
        res.nodes = search.nodes;
        res.status = SearchStatus::BudgetExceeded;
    }
    return res;
}

ImmersionResult contains_w4(const Multigraph& g, long node_budget) {
    return find_immersion(g, gen::wheel(4), node_budget);
}

} // namespace w4
