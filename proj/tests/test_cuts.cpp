#include <doctest.h>

#include <set>

#include "w4/cuts.hpp"
#include "w4/generators.hpp"
#include "w4/oracles.hpp"

using namespace w4;

namespace {

VertexSet vs(int n, std::initializer_list<int> members) {
    return VertexSet::of(n, std::vector<int>(members));
}

bool paths_edge_disjoint(const std::vector<std::vector<int>>& paths) {
    std::set<int> used;
    for (const auto& p : paths)
        for (int e : p)
            if (!used.insert(e).second) return false;
    return true;
}

bool path_connects(const Multigraph& g, const std::vector<int>& path,
                   const VertexSet& a, const VertexSet& b) {
    if (path.empty()) return false;
    // walk the edge sequence from an a-endpoint
    for (auto [s0, s1] : {g.edge(path.front()),
                          std::pair{g.edge(path.front()).second,
                                    g.edge(path.front()).first}}) {
        if (!a.test(s0)) continue;
        int cur = s0;
        bool ok = true;
        for (int e : path) {
            auto [u, v] = g.edge(e);
            if (u == cur) cur = v;
            else if (v == cur) cur = u;
            else { ok = false; break; }
        }
        if (ok && b.test(cur)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("max_edge_flow on fixed graphs") {
    SUBCASE("K4 corner to corner") {
        Multigraph k4 = gen::complete(4);
        auto f = max_edge_flow(k4, vs(4, {0}), vs(4, {3}));
        CHECK(f.value == 3);
        CHECK(f.paths.size() == 3);
    }
    SUBCASE("doubled 4-cycle across") {
        Multigraph dc4 = gen::doubled_cycle(4);
        auto f = max_edge_flow(dc4, vs(4, {0}), vs(4, {2}));
        CHECK(f.value == 4);
    }
    SUBCASE("disconnected pair has flow 0") {
        Multigraph g(4, {{0, 1}, {2, 3}});
        auto f = max_edge_flow(g, vs(4, {0}), vs(4, {2}));
        CHECK(f.value == 0);
        CHECK(f.paths.empty());
    }
    SUBCASE("set-to-set flow") {
        Multigraph p5 = gen::path(5);
        auto f = max_edge_flow(p5, vs(5, {0, 4}), vs(5, {2}));
        CHECK(f.value == 2);
    }
}

TEST_CASE("flow witnesses are valid edge-disjoint a-b paths") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Multigraph g = gen::random_multigraph(7, 11, 2, seed);
        VertexSet a = vs(7, {0}), b = vs(7, {6});
        auto f = max_edge_flow(g, a, b);
        CHECK(static_cast<int>(f.paths.size()) == f.value);
        CHECK(paths_edge_disjoint(f.paths));
        for (const auto& p : f.paths) {
            CAPTURE(seed);
            CHECK(path_connects(g, p, a, b));
        }
    }
}

TEST_CASE("max flow matches the packing oracle") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Multigraph g = gen::random_multigraph(6, 8, 2, seed);
        VertexSet a = vs(6, {0}), b = vs(6, {5});
        CHECK(max_edge_flow(g, a, b).value == oracle::max_flow_by_packing(g, a, b));
    }
}

TEST_CASE("min cut matches max flow and the subset oracle") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Multigraph g = gen::random_multigraph(6, 9, 2, seed);
        VertexSet a = vs(6, {0, 1}), b = vs(6, {5});
        EdgeCut cut = min_edge_cut(g, a, b);
        int flow = max_edge_flow(g, a, b).value;
        CHECK(cut.order() == flow);
        CHECK(cut.order() == oracle::min_cut_by_subsets(g, a, b));
        // removing the cut separates a from b
        VertexSet reach = reachable_set(g, a, cut.edges);
        CHECK_FALSE(reach.intersects(b));
        CHECK(cut.minimal);
    }
}

TEST_CASE("min cut on already separated terminals is the order-0 sentinel") {
    Multigraph g(4, {{0, 1}, {2, 3}});
    EdgeCut cut = min_edge_cut(g, vs(4, {0}), vs(4, {2}));
    CHECK(cut.order() == 0);
}

TEST_CASE("internal cuts of the path on 5 vertices") {
    // edges of P5: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,4); only the two middle
    // edges split into sides of size >= 2
    auto cuts = enumerate_internal_cuts(gen::path(5), 1);
    REQUIRE(cuts.size() == 2);
    CHECK(cuts[0].edges == std::vector<int>{1});
    CHECK(cuts[1].edges == std::vector<int>{2});
    for (const auto& c : cuts) {
        CHECK(c.minimal);
        CHECK(c.internal);
        CHECK_FALSE(c.side.test(0)); // side excludes the smallest id
        CHECK(c.side.count() >= 2);
    }
}

TEST_CASE("internal cut enumeration matches the partition oracle") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Multigraph g = gen::random_multigraph(7, 9, 2, seed);
        for (int max_order = 1; max_order <= 3; ++max_order) {
            auto fast = enumerate_internal_cuts(g, max_order);
            std::set<std::vector<int>> got;
            for (const auto& c : fast) got.insert(c.edges);
            CHECK(got.size() == fast.size());
            auto ref = oracle::internal_cuts_by_partitions(g, max_order);
            CAPTURE(seed);
            CAPTURE(max_order);
            CHECK(got == std::set<std::vector<int>>(ref.begin(), ref.end()));
        }
    }
}

TEST_CASE("doubled cycles have no internal cut of order <= 3") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(enumerate_internal_cuts(gen::doubled_cycle(n), 3).empty());
        CHECK(is_internally_k_edge_connected(gen::doubled_cycle(n), 4));
    }
}

TEST_CASE("K4 is prime, two triangles sharing a 3-cut are not") {
    CHECK(enumerate_internal_cuts(gen::complete(4), 3).empty());
    // prism: two triangles joined by a perfect matching of order 3
    Multigraph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                         {0, 3}, {1, 4}, {2, 5}});
    auto cuts = enumerate_internal_cuts(prism, 3);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].order() == 3);
    CHECK(cuts[0].side == vs(6, {3, 4, 5}));
}

TEST_CASE("important separators: single edge bridge") {
    Multigraph p3 = gen::path(3);
    auto seps = enumerate_important_separators(p3, vs(3, {0}), vs(3, {2}), 2);
    REQUIRE(seps.size() == 1);
    // only the edge nearer y is important
    CHECK(seps[0].edges == std::vector<int>{1});
    CHECK(seps[0].reachable == vs(3, {0, 1}));
}

TEST_CASE("important separators match the definitional oracle") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Multigraph g = gen::random_multigraph(6, 8, 2, seed);
        VertexSet x = vs(6, {0}), y = vs(6, {5});
        for (int k = 0; k <= 4; ++k) {
            auto fast = enumerate_important_separators(g, x, y, k);
            auto ref = oracle::important_separators_by_subsets(g, x, y, k);
            CAPTURE(seed);
            CAPTURE(k);
            REQUIRE(fast.size() == ref.size());
            for (size_t i = 0; i < fast.size(); ++i) {
                CHECK(fast[i].edges == ref[i].edges);
                CHECK(fast[i].reachable == ref[i].reachable);
            }
            CHECK(fast.size() <= static_cast<size_t>(1) << (2 * k));
        }
    }
}

TEST_CASE("important separator count bound is tight on parallel paths") {
    // x and y joined by two internally disjoint 2-edge paths: the four
    // minimal 2-cuts picking one edge per path are not all important
    Multigraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    auto seps = enumerate_important_separators(g, vs(4, {0}), vs(4, {3}), 2);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].reachable == vs(4, {0, 1, 2}));
}
