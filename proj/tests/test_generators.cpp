#include <doctest.h>

#include <cstdlib>
#include <set>

#include "w4/generators.hpp"
#include "w4/io.hpp"

using namespace w4;

TEST_CASE("wheel") {
    Multigraph w4g = gen::wheel(4);
    CHECK(w4g.vertex_count() == 5);
    CHECK(w4g.edge_count() == 8);
    CHECK(w4g.degree(4) == 4);            // hub
    for (int v = 0; v < 4; ++v) CHECK(w4g.degree(v) == 3);
    CHECK_THROWS_AS(gen::wheel(2), std::invalid_argument);
}

TEST_CASE("grid") {
    Multigraph g3 = gen::grid(3);
    CHECK(g3.vertex_count() == 9);
    CHECK(g3.edge_count() == 12);
    CHECK(component_count(g3) == 1);
    // corner, edge, center degrees
    CHECK(g3.degree(0) == 2);
    CHECK(g3.degree(1) == 3);
    CHECK(g3.degree(4) == 4);
}

TEST_CASE("cycle, path, complete") {
    CHECK(gen::cycle(5).edge_count() == 5);
    CHECK(gen::path(5).edge_count() == 4);
    CHECK(gen::complete(5).edge_count() == 10);
    CHECK(is_isomorphic(gen::cycle(3), gen::complete(3)));
    CHECK_THROWS_AS(gen::cycle(2), std::invalid_argument);
    CHECK(gen::path(1).edge_count() == 0);
}

TEST_CASE("doubled_cycle is 4-regular with doubled edges") {
    for (int n = 3; n <= 10; ++n) {
        Multigraph g = gen::doubled_cycle(n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == 2 * n);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 4);
        CHECK(is_isomorphic(simplify(g), gen::cycle(n)));
    }
}

TEST_CASE("wall structure") {
    for (int r = 2; r <= 4; ++r) {
        CAPTURE(r);
        auto w = gen::wall_with_coords(r);
        CHECK(is_subcubic(w.graph));
        CHECK(component_count(w.graph) == 1);
        for (int v = 0; v < w.graph.vertex_count(); ++v)
            CHECK(w.graph.degree(v) >= 2);
        REQUIRE(static_cast<int>(w.coords.size()) == w.graph.vertex_count());
        // coordinates stay inside the (r+1) x (2r+2) band
        std::set<std::pair<int, int>> seen;
        for (auto [i, j] : w.coords) {
            CHECK(i >= 1); CHECK(i <= r + 1);
            CHECK(j >= 1); CHECK(j <= 2 * r + 2);
            CHECK(seen.insert({i, j}).second);
        }
        // every edge joins grid neighbors: wall(r) embeds in the
        // (2r+2) x (2r+2) grid as a subgraph
        for (auto [u, v] : w.graph.edges()) {
            auto [iu, ju] = w.coords[u];
            auto [iv, jv] = w.coords[v];
            CHECK(std::abs(iu - iv) + std::abs(ju - jv) == 1);
        }
    }
}

TEST_CASE("wall(2) has the expected size") {
    // height 2: 3 x 6 grid positions minus the two removed degree-1 corners
    Multigraph w2 = gen::wall(2);
    CHECK(w2.vertex_count() == 16);
    CHECK(is_subcubic(w2));
}

TEST_CASE("subdivided_wall") {
    Multigraph w = gen::wall(2);
    Multigraph same = gen::subdivided_wall(2, {});
    CHECK(same == w);
    Multigraph sub = gen::subdivided_wall(2, {{0, 3}, {5, 2}});
    CHECK(sub.vertex_count() == w.vertex_count() + 3);
    CHECK(sub.edge_count() == w.edge_count() + 3);
    CHECK(is_subcubic(sub));
    CHECK_THROWS_AS(gen::subdivided_wall(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(gen::subdivided_wall(2, {{999, 2}}), std::invalid_argument);
}

TEST_CASE("random_multigraph is deterministic and respects caps") {
    Multigraph a = gen::random_multigraph(8, 12, 2, 7);
    Multigraph b = gen::random_multigraph(8, 12, 2, 7);
    CHECK(a == b);
    CHECK(a.vertex_count() == 8);
    CHECK(a.edge_count() == 12);
    Multigraph c = gen::random_multigraph(8, 12, 2, 8);
    CHECK(a != c);

    std::map<std::pair<int, int>, int> mult;
    for (auto e : a.edges()) ++mult[e];
    for (auto& [e, k] : mult) CHECK(k <= 2);

    CHECK_THROWS_AS(gen::random_multigraph(2, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("generator serialization is bit-exact") {
    CHECK(write_graph_string(gen::wheel(4)) ==
          "5 8\n0 1\n0 3\n0 4\n1 2\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(write_graph_string(gen::doubled_cycle(3)) ==
          "3 6\n0 1\n0 1\n0 2\n0 2\n1 2\n1 2\n");
    CHECK(write_graph_string(gen::random_multigraph(5, 6, 2, 42)) ==
          write_graph_string(gen::random_multigraph(5, 6, 2, 42)));
}

TEST_CASE("splitmix64 reference values") {
    // reference outputs for the published splitmix64 algorithm, state 0
    uint64_t state = 0;
    CHECK(gen::splitmix64(state) == 0xe220a8397b1dcdafULL);
    CHECK(gen::splitmix64(state) == 0x6e789e6aa1b965f4ULL);
    CHECK(gen::splitmix64(state) == 0x06c45d188009454fULL);
}
