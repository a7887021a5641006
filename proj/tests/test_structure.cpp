#include <doctest.h>

#include "w4/campaigns.hpp"
#include "w4/generators.hpp"
#include "w4/io.hpp"
#include "w4/serialize.hpp"
#include "w4/structure.hpp"

using namespace w4;

TEST_CASE("structure report on a subcubic graph") {
    auto rep = verify_structure_theorem(gen::wall(3));
    CHECK(rep.input_w4_free == TriBool::True);
    CHECK(rep.premises_hold);
    for (const auto& p : rep.primes) CHECK(p.cls == PrimeClass::Subcubic);
}

TEST_CASE("structure report on doubled cycles") {
    for (int n = 3; n <= 8; ++n) {
        auto rep = verify_structure_theorem(gen::doubled_cycle(n));
        CHECK(rep.input_w4_free == TriBool::True);
        CHECK(rep.premises_hold);
        REQUIRE(rep.primes.size() == 1);
        const auto& p = rep.primes[0];
        CHECK(p.cls == PrimeClass::Degree4);
        CHECK(p.internally_4ec);
        CHECK(p.w4_free == TriBool::True);
        REQUIRE(p.tw.has_value());
        CHECK(p.tw->upper == 2);
        CHECK(rep.max_prime_treewidth == 2);
        CHECK(rep.treewidth_exact_everywhere);
    }
}

TEST_CASE("structure report flags a W4-containing input") {
    auto rep = verify_structure_theorem(gen::wheel(4));
    CHECK(rep.input_w4_free == TriBool::False);
    CHECK(rep.primes.empty());
}

TEST_CASE("structure report on random W4-free graphs") {
    int seen = 0;
    for (uint64_t seed = 1; seed <= 30 && seen < 12; ++seed) {
        Multigraph g = gen::random_multigraph(10, 13, 2, seed);
        auto probe = contains_w4(g, 5'000'000);
        if (!probe.decided() || probe.found()) continue;
        ++seen;
        auto rep = verify_structure_theorem(g, 5'000'000);
        CAPTURE(seed);
        CHECK(rep.input_w4_free == TriBool::True);
        CHECK(rep.premises_hold);
        CHECK(rep.max_prime_treewidth <= 6);
        for (const auto& p : rep.primes) {
            if (p.cls == PrimeClass::Subcubic) {
                CHECK(is_subcubic(p.prime));
            } else {
                CHECK(p.prime.max_degree() >= 4);
                CHECK(p.internally_4ec);
                CHECK(p.w4_free == TriBool::True);
            }
        }
    }
    CHECK(seen >= 5);
}

TEST_CASE("immersion model JSON round trip") {
    Multigraph w4g = gen::wheel(4);
    auto model = *contains_w4(w4g).model;
    auto j = to_json(model);
    auto back = model_from_json(j);
    CHECK(back.vertex_map == model.vertex_map);
    CHECK(back.edge_map == model.edge_map);
}

TEST_CASE("decomposition JSON round trip") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Multigraph g = gen::random_multigraph(9, 12, 2, seed);
        auto forest = decompose(g);
        auto j = to_json(forest);
        auto back = forest_from_json(j);
        CAPTURE(seed);
        CHECK(recompose(back) == recompose(forest));
        CHECK(primes(back).size() == primes(forest).size());
    }
}

TEST_CASE("reports serialize with verdicts spelled out") {
    Multigraph k4 = gen::complete(4);
    auto rep = check_invariance(k4, 3, k4, 3, {{0, 0}, {1, 1}, {2, 2}});
    auto j = to_json(rep);
    CHECK(j["t"] == 3);
    CHECK(j["iff_holds"] == "yes");
    CHECK(j["composition_w4"] == "no");

    auto sj = to_json(verify_structure_theorem(gen::doubled_cycle(4)));
    CHECK(sj["input_w4_free"] == "yes");
    CHECK(sj["premises_hold"] == true);
    CHECK(sj["primes"].size() == 1);
}

TEST_CASE("composition samples serialize with their composition") {
    auto s = bundled_order4_witness();
    auto j = to_json(s);
    CHECK(j["t"] == 4);
    Multigraph comp = read_graph_string(j["composition"].get<std::string>());
    CHECK(comp == compose(s.g1, s.v1, s.g2, s.v2, s.pi));
    Multigraph g1 = read_graph_string(j["g1"].get<std::string>());
    CHECK(g1 == s.g1);
}

TEST_CASE("cut and separator text rendering") {
    auto cuts = enumerate_internal_cuts(gen::path(5), 1);
    REQUIRE(!cuts.empty());
    std::string text = cut_to_text(cuts[0]);
    CHECK(text.find('1') != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("campaign smoke runs") {
    RunConfig cfg;
    cfg.trials = 12;
    cfg.max_n = 6;
    SUBCASE("composition invariance") {
        auto res = run_composition_invariance(cfg);
        CHECK(res.passed());
        CHECK(res.decided + res.unknown == cfg.trials);
        CHECK(res.held == res.decided);
    }
    SUBCASE("part immersion") {
        auto res = run_part_immersion(cfg);
        CHECK(res.passed());
        CHECK(res.succeeded == cfg.trials);
    }
    SUBCASE("roundtrip") {
        auto res = run_decomposition_roundtrip(cfg);
        CHECK(res.passed());
        CHECK(res.checked == cfg.trials);
    }
}
