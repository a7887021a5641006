#ifndef W4_GENERATORS_HPP
#define W4_GENERATORS_HPP

#include <cstdint>
#include <map>

#include "w4/multigraph.hpp"

namespace w4::gen {

/// Cycle of length s plus a hub adjacent to every cycle vertex; hub id is s.
Multigraph wheel(int s);

/// r x r grid; vertex (i, j) has id i * r + j, 0-based.
Multigraph grid(int r);

Multigraph cycle(int n);
Multigraph path(int n);
Multigraph complete(int n);

/// Cycle on n vertices with every edge doubled. 4-regular.
Multigraph doubled_cycle(int n);

struct Wall {
    Multigraph graph;
    /// (row, column) of each surviving vertex, 1-based, in the pre-removal
    /// coordinate system of the construction rule.
    std::vector<std::pair<int, int>> coords;
};

/// Elementary wall of height r: rows 1..r+1, columns 1..2r+2, horizontal
/// edges between column neighbors, vertical edge at (i, j)-(i+1, j) when
/// i + j is even, then degree-1 vertices removed.
Wall wall_with_coords(int r);
Multigraph wall(int r);

/// Replace wall edges by paths; lengths keyed by edge index of wall(r),
/// missing entries keep length 1.
Multigraph subdivided_wall(int r, const std::map<int, int>& lengths);

/// Seeded random multigraph: n vertices, m edges, per-pair multiplicity
/// at most max_multiplicity, no self-loops. Deterministic per seed:
/// endpoints are drawn from an xorshift-style generator (splitmix64) by
/// modulo reduction, resampling pairs that would exceed the multiplicity
/// cap, so output is identical across platforms.
Multigraph random_multigraph(int n, int m, int max_multiplicity, uint64_t seed);

/// splitmix64 step, exposed so campaign code shares the documented stream.
uint64_t splitmix64(uint64_t& state);

} // namespace w4::gen

#endif
