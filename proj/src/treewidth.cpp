#include "w4/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace w4 {

namespace {

std::vector<Bitset> simple_adjacency(const Multigraph& g) {
    std::vector<Bitset> adj(g.vertex_count(), Bitset(g.vertex_count()));
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    return adj;
}

std::vector<uint32_t> mask_adjacency(const Multigraph& g) {
    std::vector<uint32_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= uint32_t(1) << v;
        adj[v] |= uint32_t(1) << u;
    }
    return adj;
}

// neighbors of v's reach through the eliminated set s, excluding s and v
int elimination_degree(const std::vector<uint32_t>& adj, uint32_t s, int v) {
    uint32_t inside = s | (uint32_t(1) << v);
    uint32_t comp = uint32_t(1) << v;
    uint32_t nbrs = 0;
    for (;;) {
        uint32_t reach = 0;
        for (uint32_t rest = comp; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            reach |= adj[u];
        }
        nbrs = reach;
        uint32_t grown = comp | (reach & inside);
        if (grown == comp) break;
        comp = grown;
    }
    return std::popcount(nbrs & ~inside);
}

} // namespace

int elimination_width(const Multigraph& g, const std::vector<int>& order) {
    Multigraph s = simplify(g);
    if (static_cast<int>(order.size()) != s.vertex_count())
        throw std::invalid_argument("elimination order size mismatch");
    auto adj = simple_adjacency(s);
    Bitset gone(s.vertex_count());
    int width = 0;
    for (int v : order) {
        Bitset live = adj[v].minus(gone);
        width = std::max(width, live.count());
        auto nb = live.to_list();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].set(nb[j]);
                adj[nb[j]].set(nb[i]);
            }
        gone.set(v);
    }
    return width;
}

TreewidthResult treewidth_exact(const Multigraph& g) {
    Multigraph s = simplify(g);
    int n = s.vertex_count();
    if (n > 20) throw std::invalid_argument("treewidth_exact: more than 20 vertices");
    TreewidthResult res;
    res.exact = true;
    if (n == 0) return res;
    auto adj = mask_adjacency(s);
    uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    std::vector<uint8_t> dp(size_t(1) << n, 0);
    for (uint32_t mask = 1; mask <= full; ++mask) {
        int best = 255;
        for (uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t prev = mask & ~(uint32_t(1) << v);
            int cand = std::max<int>(dp[prev], elimination_degree(adj, prev, v));
            best = std::min(best, cand);
        }
        dp[mask] = static_cast<uint8_t>(best);
    }
    res.lower = res.upper = dp[full];
    // reconstruct a witness order (last eliminated found first)
    std::vector<int> rev_order;
    uint32_t mask = full;
    while (mask) {
        for (uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t prev = mask & ~(uint32_t(1) << v);
            int cand = std::max<int>(dp[prev], elimination_degree(adj, prev, v));
            if (cand == dp[mask]) {
                rev_order.push_back(v);
                mask = prev;
                break;
            }
        }
    }
    res.elimination_order.assign(rev_order.rbegin(), rev_order.rend());
    return res;
}

namespace {

std::vector<int> greedy_order(const Multigraph& s, bool min_fill) {
    int n = s.vertex_count();
    auto adj = simple_adjacency(s);
    Bitset gone(n);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_key = -1;
        for (int v = 0; v < n; ++v) {
            if (gone.test(v)) continue;
            Bitset live = adj[v].minus(gone);
            long key;
            if (min_fill) {
                auto nb = live.to_list();
                long fill = 0;
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j)
                        if (!adj[nb[i]].test(nb[j])) ++fill;
                key = fill;
            } else {
                key = live.count();
            }
            if (best == -1 || key < best_key) { best = v; best_key = key; }
        }
        order.push_back(best);
        Bitset live = adj[best].minus(gone);
        auto nb = live.to_list();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].set(nb[j]);
                adj[nb[j]].set(nb[i]);
            }
        gone.set(best);
    }
    return order;
}

int degeneracy(const Multigraph& s) {
    int n = s.vertex_count();
    auto adj = simple_adjacency(s);
    Bitset gone(n);
    int deg = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_d = 0;
        for (int v = 0; v < n; ++v) {
            if (gone.test(v)) continue;
            int d = adj[v].minus(gone).count();
            if (best == -1 || d < best_d) { best = v; best_d = d; }
        }
        deg = std::max(deg, best_d);
        gone.set(best);
    }
    return deg;
}

} // namespace

TreewidthResult treewidth_bounds(const Multigraph& g) {
    Multigraph s = simplify(g);
    TreewidthResult res;
    if (s.vertex_count() == 0) {
        res.exact = true;
        return res;
    }
    auto o1 = greedy_order(s, false);
    auto o2 = greedy_order(s, true);
    int w1 = elimination_width(s, o1);
    int w2 = elimination_width(s, o2);
    res.upper = std::min(w1, w2);
    res.elimination_order = w1 <= w2 ? o1 : o2;
    res.lower = degeneracy(s);
    res.exact = res.lower == res.upper;
    return res;
}

} // namespace w4
