#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "w4/campaigns.hpp"
#include "w4/cuts.hpp"
#include "w4/edgesum.hpp"
#include "w4/generators.hpp"
#include "w4/immersion.hpp"
#include "w4/io.hpp"
#include "w4/oracles.hpp"
#include "w4/serialize.hpp"
#include "w4/structure.hpp"
#include "w4/treewidth.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes: 0 success / property holds, 1 property fails or mismatch,
// 2 usage error, 3 budget exhausted
enum ExitCode { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

using w4::Multigraph;
using w4::TriBool;
using w4::VertexSet;
using nlohmann::json;

Multigraph load_graph(const std::string& path) {
    return w4::read_graph_file(path);
}

void emit(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path);
        out << text;
    }
}

json load_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

VertexSet parse_vertex_list(const std::string& list, int n) {
    VertexSet s(n);
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0 || v >= n)
            throw std::runtime_error("vertex out of range: " + tok);
        s.set(v);
    }
    if (s.none()) throw std::runtime_error("empty vertex list");
    return s;
}

json config_json(const w4::RunConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"max_n", cfg.max_n},
                {"node_budget", cfg.node_budget},
                {"version", kVersion}};
}

int cmd_gen(const std::string& family, const std::vector<long>& params,
            const std::string& out) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("gen", family + " needs " +
                                       std::to_string(k) + " parameter(s)");
    };
    Multigraph g;
    if (family == "wheel") { need(1); g = w4::gen::wheel(int(params[0])); }
    else if (family == "grid") { need(1); g = w4::gen::grid(int(params[0])); }
    else if (family == "cycle") { need(1); g = w4::gen::cycle(int(params[0])); }
    else if (family == "path") { need(1); g = w4::gen::path(int(params[0])); }
    else if (family == "complete") { need(1); g = w4::gen::complete(int(params[0])); }
    else if (family == "doubled-cycle") { need(1); g = w4::gen::doubled_cycle(int(params[0])); }
    else if (family == "wall") { need(1); g = w4::gen::wall(int(params[0])); }
    else if (family == "random") {
        need(4);
        g = w4::gen::random_multigraph(int(params[0]), int(params[1]),
                                       int(params[2]), uint64_t(params[3]));
    } else {
        throw CLI::ValidationError("gen", "unknown family: " + family);
    }
    emit(out, w4::write_graph_string(g));
    return kOk;
}

int cmd_check_w4(const std::string& file, const std::string& expect,
                 const std::string& model_out, long budget,
                 const std::string& format) {
    Multigraph g = load_graph(file);
    auto res = w4::contains_w4(g, budget);
    const char* verdict = !res.decided() ? "unknown" : (res.found() ? "yes" : "no");
    if (format == "json") {
        json j{{"contains_w4", verdict},
               {"nodes", res.nodes},
               {"node_budget", budget},
               {"version", kVersion}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "contains_w4: " << verdict << '\n';
    }
    if (res.found() && !model_out.empty())
        emit(model_out, w4::to_json(*res.model).dump(2) + "\n");
    if (!res.decided()) return kBudget;
    if (!expect.empty() && expect != verdict) return kFail;
    return kOk;
}

int cmd_immerse(const std::string& h_file, const std::string& g_file,
                const std::string& model_out, long budget,
                const std::string& format) {
    Multigraph h = load_graph(h_file);
    Multigraph g = load_graph(g_file);
    auto res = w4::find_immersion(g, h, budget);
    const char* verdict = !res.decided() ? "unknown" : (res.found() ? "yes" : "no");
    if (format == "json") {
        json j{{"immerses", verdict}, {"nodes", res.nodes}, {"version", kVersion}};
        if (res.found()) j["model"] = w4::to_json(*res.model);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "immerses: " << verdict << '\n';
    }
    if (res.found() && !model_out.empty())
        emit(model_out, w4::to_json(*res.model).dump(2) + "\n");
    if (!res.decided()) return kBudget;
    return res.found() ? kOk : kFail;
}

int cmd_certify(const std::string& g_file, const std::string& h_file,
                const std::string& model_file) {
    Multigraph g = load_graph(g_file);
    Multigraph h = load_graph(h_file);
    auto model = w4::model_from_json(load_json(model_file));
    std::string violation;
    if (w4::verify_model(g, h, model, &violation)) {
        std::cout << "model: valid\n";
        return kOk;
    }
    std::cout << "model: invalid (" << violation << ")\n";
    return kFail;
}

int cmd_cuts(const std::string& file, int max_order, const std::string& format) {
    Multigraph g = load_graph(file);
    auto cuts = w4::enumerate_internal_cuts(g, max_order);
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : cuts)
            arr.push_back(json{{"edges", c.edges}, {"side", c.side.to_list()}});
        std::cout << json{{"count", cuts.size()}, {"cuts", arr},
                          {"version", kVersion}}.dump(2) << '\n';
    } else {
        std::cout << cuts.size() << '\n';
        for (const auto& c : cuts) std::cout << w4::cut_to_text(c);
    }
    return kOk;
}

int cmd_impsep(const std::string& file, const std::string& x_list,
               const std::string& y_list, int k, const std::string& format) {
    Multigraph g = load_graph(file);
    VertexSet x = parse_vertex_list(x_list, g.vertex_count());
    VertexSet y = parse_vertex_list(y_list, g.vertex_count());
    if (x.intersects(y)) throw std::runtime_error("x and y must be disjoint");
    auto seps = w4::enumerate_important_separators(g, x, y, k);
    size_t bound = size_t(1) << (2 * k);
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : seps)
            arr.push_back(json{{"edges", s.edges},
                               {"reachable", s.reachable.to_list()}});
        std::cout << json{{"count", seps.size()}, {"bound", bound},
                          {"separators", arr}, {"version", kVersion}}.dump(2)
                  << '\n';
    } else {
        std::cout << seps.size() << " (bound " << bound << ")\n";
        for (const auto& s : seps) std::cout << w4::separator_to_text(s);
    }
    return seps.size() <= bound ? kOk : kFail;
}

int cmd_decompose(const std::string& file, const std::string& out) {
    Multigraph g = load_graph(file);
    auto forest = w4::decompose(g);
    emit(out, w4::to_json(forest).dump(2) + "\n");
    return kOk;
}

int cmd_recompose(const std::string& file, const std::string& out) {
    auto forest = w4::forest_from_json(load_json(file));
    emit(out, w4::write_graph_string(w4::recompose(forest)));
    return kOk;
}

int cmd_classify(const std::string& file, long budget, const std::string& format) {
    Multigraph g = load_graph(file);
    auto rep = w4::verify_structure_theorem(g, budget);
    if (format == "json") {
        json j = w4::to_json(rep);
        j["node_budget"] = budget;
        j["version"] = kVersion;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "input_w4_free: " << to_string(rep.input_w4_free) << '\n'
                  << "primes: " << rep.primes.size() << '\n'
                  << "premises_hold: " << (rep.premises_hold ? "yes" : "no") << '\n'
                  << "max_prime_treewidth: " << rep.max_prime_treewidth << '\n';
    }
    if (rep.input_w4_free == TriBool::Unknown) return kBudget;
    return rep.premises_hold ? kOk : kFail;
}

void dump_counterexample(const std::string& dir, int trial,
                         const w4::CompositionSample& sample,
                         const w4::InvarianceReport& report) {
    json j{{"trial", trial},
           {"sample", w4::to_json(sample)},
           {"report", w4::to_json(report)}};
    std::string path = (dir.empty() ? std::string(".") : dir) +
                       "/counterexample_trial" + std::to_string(trial) + ".json";
    std::ofstream out(path);
    out << j.dump(2) << '\n';
    std::cerr << "counterexample written to " << path << '\n';
}

int prop_theorem3(const w4::RunConfig& cfg, const std::string& dump_dir) {
    auto res = w4::run_composition_invariance(cfg);
    json j = config_json(cfg);
    j["decided"] = res.decided;
    j["held"] = res.held;
    j["unknown"] = res.unknown;
    j["failures"] = res.failures.size();
    std::cout << j.dump(2) << '\n';
    std::cout << res.held << "/" << res.decided << " hold (decided), "
              << res.unknown << " unknown\n";
    for (const auto& f : res.failures)
        dump_counterexample(dump_dir, f.trial, f.sample, f.report);
    return res.passed() ? kOk : kFail;
}

int prop_lemma31(const w4::RunConfig& cfg, const std::string& dump_dir) {
    auto res = w4::run_part_immersion(cfg);
    json j = config_json(cfg);
    j["succeeded"] = res.succeeded;
    j["failures"] = res.failures.size();
    std::cout << j.dump(2) << '\n';
    for (const auto& f : res.failures)
        dump_counterexample(dump_dir, f.trial, f.sample, f.report);
    return res.passed() ? kOk : kFail;
}

int prop_roundtrip(const w4::RunConfig& cfg) {
    auto res = w4::run_decomposition_roundtrip(cfg);
    json j = config_json(cfg);
    j["checked"] = res.checked;
    j["failures"] = res.failures.size();
    std::cout << j.dump(2) << '\n';
    for (const auto& [trial, reason] : res.failures)
        std::cerr << "trial " << trial << ": " << reason << '\n';
    return res.passed() ? kOk : kFail;
}

int prop_impsep_oracle(const w4::RunConfig& cfg) {
    uint64_t state = cfg.seed;
    int failures = 0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        int n = 2 + int(w4::gen::splitmix64(state) % uint64_t(std::max(2, cfg.max_n - 1)));
        int cap = n * (n - 1); // multiplicity cap 2
        int m = 1 + int(w4::gen::splitmix64(state) % uint64_t(std::min(8, cap)));
        Multigraph g = w4::gen::random_multigraph(
            n, m, 2, cfg.seed ^ (0xa076'1d64'78bd'642fULL * (trial + 1)));
        int xv = int(w4::gen::splitmix64(state) % uint64_t(n));
        int yv = int(w4::gen::splitmix64(state) % uint64_t(n - 1));
        if (yv >= xv) ++yv;
        int k = int(w4::gen::splitmix64(state) % 5);
        auto x = VertexSet::of(n, {xv});
        auto y = VertexSet::of(n, {yv});
        auto fast = w4::enumerate_important_separators(g, x, y, k);
        auto ref = w4::oracle::important_separators_by_subsets(g, x, y, k);
        bool same = fast.size() == ref.size();
        for (size_t i = 0; same && i < fast.size(); ++i)
            same = fast[i].edges == ref[i].edges &&
                   fast[i].reachable == ref[i].reachable;
        if (!same || fast.size() > (size_t(1) << (2 * k))) {
            ++failures;
            std::cerr << "trial " << trial << ": mismatch on\n"
                      << w4::write_graph_string(g) << "x=" << xv << " y=" << yv
                      << " k=" << k << '\n';
        }
    }
    json j = config_json(cfg);
    j["checked"] = cfg.trials;
    j["failures"] = failures;
    std::cout << j.dump(2) << '\n';
    return failures == 0 ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"W4 immersion and edge-sum decomposition toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // gen
    std::string gen_family, gen_out = "-";
    std::vector<long> gen_params;
    auto* gen = app.add_subcommand("gen", "emit a generator graph");
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params);
    gen->add_option("-o,--output", gen_out);

    // check-w4
    std::string cw_file, cw_expect, cw_model_out, cw_format = "text";
    long cw_budget = 1'000'000;
    auto* cw = app.add_subcommand("check-w4", "test W4 immersion containment");
    cw->add_option("file", cw_file)->required();
    cw->add_option("--expect", cw_expect)->check(CLI::IsMember({"yes", "no"}));
    cw->add_option("--model-out", cw_model_out);
    cw->add_option("--budget", cw_budget);
    cw->add_option("--format", cw_format)->check(CLI::IsMember({"text", "json"}));

    // immerse
    std::string im_h, im_g, im_model_out, im_format = "text";
    long im_budget = 1'000'000;
    auto* im = app.add_subcommand("immerse", "search for an immersion of H in G");
    im->add_option("h_file", im_h)->required();
    im->add_option("g_file", im_g)->required();
    im->add_option("--model-out", im_model_out);
    im->add_option("--budget", im_budget);
    im->add_option("--format", im_format)->check(CLI::IsMember({"text", "json"}));

    // certify
    std::string ce_g, ce_h, ce_model;
    auto* ce = app.add_subcommand("certify", "verify an immersion model");
    ce->add_option("g_file", ce_g)->required();
    ce->add_option("h_file", ce_h)->required();
    ce->add_option("model_file", ce_model)->required();

    // cuts
    std::string cu_file, cu_format = "text";
    int cu_max_order = 3;
    auto* cu = app.add_subcommand("cuts", "enumerate internal edge cuts");
    cu->add_option("file", cu_file)->required();
    cu->add_option("--max-order", cu_max_order)->check(CLI::Range(1, 3));
    cu->add_option("--format", cu_format)->check(CLI::IsMember({"text", "json"}));

    // impsep
    std::string is_file, is_x, is_y, is_format = "text";
    int is_k = 4;
    auto* is = app.add_subcommand("impsep", "enumerate important separators");
    is->add_option("file", is_file)->required();
    is->add_option("--x", is_x)->required();
    is->add_option("--y", is_y)->required();
    is->add_option("--k", is_k)->check(CLI::Range(0, 16));
    is->add_option("--format", is_format)->check(CLI::IsMember({"text", "json"}));

    // decompose / recompose
    std::string de_file, de_out = "-";
    auto* de = app.add_subcommand("decompose", "split into prime graphs");
    de->add_option("file", de_file)->required();
    de->add_option("-o,--output", de_out);

    std::string re_file, re_out = "-";
    auto* re = app.add_subcommand("recompose", "rebuild a graph from its tree");
    re->add_option("tree_file", re_file)->required();
    re->add_option("-o,--output", re_out);

    // classify
    std::string cl_file, cl_format = "text";
    long cl_budget = 1'000'000;
    auto* cl = app.add_subcommand("classify", "structure report over the primes");
    cl->add_option("file", cl_file)->required();
    cl->add_option("--budget", cl_budget);
    cl->add_option("--format", cl_format)->check(CLI::IsMember({"text", "json"}));

    // prop-test
    std::string pt_campaign, pt_dump_dir;
    w4::RunConfig pt_cfg;
    auto* pt = app.add_subcommand("prop-test", "randomized property campaigns");
    pt->add_option("campaign", pt_campaign)
        ->required()
        ->check(CLI::IsMember({"theorem3", "lemma3.1", "impsep-oracle", "roundtrip"}));
    pt->add_option("--trials", pt_cfg.trials);
    pt->add_option("--seed", pt_cfg.seed);
    pt->add_option("--max-n", pt_cfg.max_n);
    pt->add_option("--budget", pt_cfg.node_budget);
    pt->add_option("--dump-dir", pt_dump_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_out);
        if (cw->parsed())
            return cmd_check_w4(cw_file, cw_expect, cw_model_out, cw_budget, cw_format);
        if (im->parsed())
            return cmd_immerse(im_h, im_g, im_model_out, im_budget, im_format);
        if (ce->parsed()) return cmd_certify(ce_g, ce_h, ce_model);
        if (cu->parsed()) return cmd_cuts(cu_file, cu_max_order, cu_format);
        if (is->parsed()) return cmd_impsep(is_file, is_x, is_y, is_k, is_format);
        if (de->parsed()) return cmd_decompose(de_file, de_out);
        if (re->parsed()) return cmd_recompose(re_file, re_out);
        if (cl->parsed()) return cmd_classify(cl_file, cl_budget, cl_format);
        if (pt->parsed()) {
            if (pt_campaign == "theorem3") return prop_theorem3(pt_cfg, pt_dump_dir);
            if (pt_campaign == "lemma3.1") return prop_lemma31(pt_cfg, pt_dump_dir);
            if (pt_campaign == "roundtrip") return prop_roundtrip(pt_cfg);
            return prop_impsep_oracle(pt_cfg);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const w4::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
