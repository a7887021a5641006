#include <doctest.h>

#include "w4/generators.hpp"
#include "w4/io.hpp"
#include "w4/multigraph.hpp"

using namespace w4;

TEST_CASE("degree counts incidences with multiplicity") {
    Multigraph dc3 = gen::doubled_cycle(3);
    for (int v = 0; v < 3; ++v) CHECK(dc3.degree(v) == 4);

    Multigraph w4g = gen::wheel(4);
    CHECK(w4g.degree(4) == 4); // hub

    Multigraph iso(3, {{0, 1}});
    CHECK(iso.degree(2) == 0);

    CHECK_THROWS_AS(iso.degree(5), std::invalid_argument);
}

TEST_CASE("construction rejects self-loops and bad endpoints") {
    CHECK_THROWS_AS(Multigraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("boundary of vertex sets") {
    Multigraph dc4 = gen::doubled_cycle(4);
    SUBCASE("singleton boundary is degree") {
        for (int v = 0; v < 4; ++v)
            CHECK(boundary(dc4, VertexSet::of(4, {v})) == dc4.degree(v));
    }
    SUBCASE("two adjacent vertices of the doubled 4-cycle") {
        CHECK(boundary(dc4, VertexSet::of(4, {0, 1})) == 4);
    }
    SUBCASE("a whole component has boundary 0") {
        Multigraph two(4, {{0, 1}, {2, 3}});
        CHECK(boundary(two, VertexSet::of(4, {0, 1})) == 0);
    }
    SUBCASE("empty and full sets are rejected") {
        CHECK_THROWS_AS(boundary(dc4, VertexSet(4)), std::invalid_argument);
        CHECK_THROWS_AS(boundary(dc4, ~VertexSet(4)), std::invalid_argument);
    }
    SUBCASE("boundary is symmetric under complement") {
        Multigraph g = gen::random_multigraph(6, 9, 2, 11);
        for (uint32_t mask = 1; mask + 1 < (1u << 6); ++mask) {
            VertexSet s(6);
            for (int i = 0; i < 6; ++i)
                if (mask & (1u << i)) s.set(i);
            CHECK(boundary(g, s) == boundary(g, ~s));
        }
    }
}

TEST_CASE("components") {
    CHECK(components(Multigraph(0, {})).empty());
    CHECK(components(gen::wall(2)).size() == 1);
    Multigraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = components(two_triangles);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 3);
    CHECK(comps[1].count() == 3);
}

TEST_CASE("delete_edges and delete_vertex") {
    Multigraph k3 = gen::complete(3);
    SUBCASE("deleting all edges of K3 leaves 3 isolated vertices") {
        auto res = delete_edges(k3, ~EdgeSet(3));
        CHECK(res.graph.vertex_count() == 3);
        CHECK(res.graph.edge_count() == 0);
        CHECK(res.edge_map == std::vector<int>{-1, -1, -1});
    }
    SUBCASE("deleting the hub of wheel(4) gives C4") {
        auto res = delete_vertex(gen::wheel(4), 4);
        CHECK(is_isomorphic(res.graph, gen::cycle(4)));
        CHECK(res.vertex_map == std::vector<int>{0, 1, 2, 3, -1});
    }
    SUBCASE("deleting one copy of a doubled edge recounts degrees") {
        Multigraph dc3 = gen::doubled_cycle(3);
        EdgeSet one(dc3.edge_count());
        one.set(0); // one copy of the 0-1 edge
        auto res = delete_edges(dc3, one);
        std::vector<int> degs{res.graph.degree(0), res.graph.degree(1),
                              res.graph.degree(2)};
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<int>{3, 3, 4});
    }
}

TEST_CASE("lift") {
    SUBCASE("path a-b-c lifts to a single edge ac") {
        Multigraph p(3, {{0, 1}, {1, 2}});
        Multigraph lifted = lift(p, 0, 1);
        CHECK(lifted.edge_count() == 1);
        CHECK(lifted.edge(0) == std::pair{0, 2});
        CHECK(lifted.degree(1) == 0);
    }
    SUBCASE("C4 lift of two adjacent edges gives a triangle shape") {
        Multigraph c4 = gen::cycle(4);
        // edges of C4: (0,1) (0,3) (1,2) (2,3)
        Multigraph lifted = lift(c4, 0, 2); // (0,1) and (1,2) share vertex 1
        CHECK(lifted.degree(1) == 0);
        auto del = delete_vertex(lifted, 1);
        CHECK(is_isomorphic(del.graph, gen::complete(3)));
    }
    SUBCASE("parallel pair at a common vertex is rejected") {
        Multigraph par(2, {{0, 1}, {0, 1}});
        CHECK_THROWS_AS(lift(par, 0, 1), std::invalid_argument);
    }
    SUBCASE("lift drops the shared vertex degree by exactly 2") {
        Multigraph g = gen::wheel(5);
        Multigraph lifted = lift(g, 0, 1); // two edges at vertex 0
        auto [a, b] = g.edge(0);
        auto [c, d] = g.edge(1);
        int shared = (a == c || a == d) ? a : b;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int expect = g.degree(v) - (v == shared ? 2 : 0);
            CHECK(lifted.degree(v) == expect);
        }
    }
}

TEST_CASE("is_subcubic") {
    CHECK(is_subcubic(gen::wall(3)));
    CHECK_FALSE(is_subcubic(gen::wheel(4)));
    CHECK_FALSE(is_subcubic(gen::doubled_cycle(5)));
}

TEST_CASE("is_isomorphic") {
    SUBCASE("relabeled copies match") {
        Multigraph g = gen::random_multigraph(7, 10, 2, 3);
        std::vector<int> perm{3, 0, 6, 2, 5, 1, 4};
        CHECK(is_isomorphic(g, relabel(g, perm)));
    }
    SUBCASE("C4 vs doubled path on 3 vertices") {
        Multigraph dp(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
        CHECK_FALSE(is_isomorphic(gen::cycle(4), dp));
    }
    SUBCASE("a doubled edge is the 2-cycle") {
        Multigraph a(2, {{0, 1}, {0, 1}});
        Multigraph b(2, {{1, 0}, {0, 1}});
        CHECK(is_isomorphic(a, b));
    }
    SUBCASE("multiplicity profile matters") {
        Multigraph a(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
        Multigraph b(3, {{0, 1}, {1, 2}, {1, 2}, {0, 2}});
        CHECK(is_isomorphic(a, b)); // symmetric relabeling exists
        Multigraph c(3, {{0, 1}, {0, 1}, {0, 1}, {0, 2}});
        CHECK_FALSE(is_isomorphic(a, c));
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Multigraph g = gen::random_multigraph(8, 12, 3, seed);
        int total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}
