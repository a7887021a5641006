#include "w4/generators.hpp"

#include <map>
#include <stdexcept>

namespace w4::gen {

Multigraph wheel(int s) {
    if (s < 3) throw std::invalid_argument("wheel needs s >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i) {
        edges.emplace_back(i, (i + 1) % s);
        edges.emplace_back(i, s);
    }
    return Multigraph(s + 1, std::move(edges));
}

Multigraph grid(int r) {
    if (r < 1) throw std::invalid_argument("grid needs r >= 1");
    std::vector<std::pair<int, int>> edges;
    auto id = [r](int i, int j) { return i * r + j; };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (j + 1 < r) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < r) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    return Multigraph(r * r, std::move(edges));
}

Multigraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Multigraph(n, std::move(edges));
}

Multigraph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Multigraph(n, std::move(edges));
}

Multigraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Multigraph(n, std::move(edges));
}

Multigraph doubled_cycle(int n) {
    if (n < 3) throw std::invalid_argument("doubled cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + 1) % n);
    }
    return Multigraph(n, std::move(edges));
}

Wall wall_with_coords(int r) {
    if (r < 2) throw std::invalid_argument("wall needs r >= 2");
    int rows = r + 1, cols = 2 * r + 2;
    auto raw_id = [cols](int i, int j) { return (i - 1) * cols + (j - 1); };
    int raw_n = rows * cols;
    std::vector<std::pair<int, int>> raw_edges;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            if (j + 1 <= cols) raw_edges.emplace_back(raw_id(i, j), raw_id(i, j + 1));
            // vertical edge from (i, j) to (i + 1, j) exists when i + j is even
            if (i + 1 <= rows && (i + j) % 2 == 0)
                raw_edges.emplace_back(raw_id(i, j), raw_id(i + 1, j));
        }
    std::vector<int> deg(raw_n, 0);
    for (auto [u, v] : raw_edges) { ++deg[u]; ++deg[v]; }
    std::vector<int> vmap(raw_n, -1);
    std::vector<std::pair<int, int>> coords;
    int next = 0;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            int u = raw_id(i, j);
            if (deg[u] <= 1) continue;
            vmap[u] = next++;
            coords.emplace_back(i, j);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : raw_edges)
        if (vmap[u] != -1 && vmap[v] != -1) edges.emplace_back(vmap[u], vmap[v]);
    return {Multigraph(next, std::move(edges)), std::move(coords)};
}

Multigraph wall(int r) { return wall_with_coords(r).graph; }

Multigraph subdivided_wall(int r, const std::map<int, int>& lengths) {
    Multigraph w = wall(r);
    for (auto [e, len] : lengths) {
        if (e < 0 || e >= w.edge_count())
            throw std::invalid_argument("subdivision edge index out of range");
        if (len < 1) throw std::invalid_argument("subdivision length must be >= 1");
    }
    std::vector<std::pair<int, int>> edges;
    int next = w.vertex_count();
    for (int e = 0; e < w.edge_count(); ++e) {
        auto it = lengths.find(e);
        int len = it == lengths.end() ? 1 : it->second;
        if (len < 1) throw std::invalid_argument("subdivision length must be >= 1");
        auto [u, v] = w.edge(e);
        int prev = u;
        for (int s = 1; s < len; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Multigraph(next, std::move(edges));
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Multigraph random_multigraph(int n, int m, int max_multiplicity, uint64_t seed) {
    if (n < 0 || m < 0 || max_multiplicity < 1)
        throw std::invalid_argument("bad random_multigraph parameters");
    long capacity = static_cast<long>(n) * (n - 1) / 2 * max_multiplicity;
    if (m > 0 && (n < 2 || m > capacity))
        throw std::invalid_argument("m not achievable without self-loops");
    uint64_t state = seed;
    std::map<std::pair<int, int>, int> mult;
    std::vector<std::pair<int, int>> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(splitmix64(state) % n);
        int v = static_cast<int>(splitmix64(state) % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        int& c = mult[{u, v}];
        if (c >= max_multiplicity) continue;
        ++c;
        edges.emplace_back(u, v);
    }
    return Multigraph(n, std::move(edges));
}

} // namespace w4::gen
