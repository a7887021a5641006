#include "w4/serialize.hpp"

#include <sstream>

#include "w4/io.hpp"

namespace w4 {

using nlohmann::json;

json to_json(const ImmersionModel& model) {
    return json{{"vertex_map", model.vertex_map}, {"edge_map", model.edge_map}};
}

ImmersionModel model_from_json(const json& j) {
    ImmersionModel m;
    m.vertex_map = j.at("vertex_map").get<std::vector<int>>();
    m.edge_map = j.at("edge_map").get<std::vector<std::vector<int>>>();
    return m;
}

json to_json(const DecompositionNode& node) {
    if (node.is_leaf()) return json{{"prime", write_graph_string(*node.prime)}};
    json pi = json::array();
    for (auto [a, b] : node.pi) pi.push_back(json::array({a, b}));
    return json{{"t", node.t},
                {"cut_edges", node.cut_edges},
                {"pi", pi},
                {"v1", node.v1},
                {"v2", node.v2},
                {"relabel", node.relabel},
                {"left", to_json(*node.left)},
                {"right", to_json(*node.right)}};
}

DecompositionTree tree_from_json(const json& j) {
    auto node = std::make_unique<DecompositionNode>();
    if (j.contains("prime")) {
        node->prime = read_graph_string(j.at("prime").get<std::string>());
        return node;
    }
    node->t = j.at("t").get<int>();
    node->cut_edges = j.at("cut_edges").get<std::vector<int>>();
    for (const auto& p : j.at("pi"))
        node->pi.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    node->v1 = j.at("v1").get<int>();
    node->v2 = j.at("v2").get<int>();
    node->relabel = j.at("relabel").get<std::vector<int>>();
    node->left = tree_from_json(j.at("left"));
    node->right = tree_from_json(j.at("right"));
    return node;
}

json to_json(const DecompositionForest& forest) {
    if (forest.trees.size() == 1) return to_json(*forest.trees.front());
    json parts = json::array();
    for (const auto& t : forest.trees) parts.push_back(to_json(*t));
    return json{{"forest", parts}};
}

DecompositionForest forest_from_json(const json& j) {
    DecompositionForest forest;
    if (j.contains("forest")) {
        for (const auto& t : j.at("forest"))
            forest.trees.push_back(tree_from_json(t));
    } else {
        forest.trees.push_back(tree_from_json(j));
    }
    return forest;
}

json to_json(const InvarianceReport& rep) {
    return json{{"t", rep.t},
                {"g1_w4", to_string(rep.g1_w4)},
                {"g2_w4", to_string(rep.g2_w4)},
                {"composition_w4", to_string(rep.composition_w4)},
                {"iff_holds", to_string(rep.iff_holds)},
                {"g1_immersed", to_string(rep.g1_immersed)},
                {"g2_immersed", to_string(rep.g2_immersed)}};
}

json to_json(const StructureReport& rep) {
    json primes = json::array();
    for (const auto& pr : rep.primes) {
        json p{{"graph", write_graph_string(pr.prime)},
               {"class", pr.cls == PrimeClass::Subcubic ? "SUBCUBIC" : "DEGREE4"}};
        if (pr.cls == PrimeClass::Degree4) {
            p["internally_4ec"] = pr.internally_4ec;
            p["w4_free"] = to_string(pr.w4_free);
            if (pr.tw) {
                p["tw"] = json{{"lower", pr.tw->lower},
                               {"upper", pr.tw->upper},
                               {"exact", pr.tw->exact},
                               {"elimination_order", pr.tw->elimination_order}};
            }
        }
        primes.push_back(std::move(p));
    }
    return json{{"input_w4_free", to_string(rep.input_w4_free)},
                {"premises_hold", rep.premises_hold},
                {"max_prime_treewidth", rep.max_prime_treewidth},
                {"treewidth_exact_everywhere", rep.treewidth_exact_everywhere},
                {"primes", std::move(primes)}};
}

json to_json(const CompositionSample& sample) {
    json pi = json::array();
    for (auto [a, b] : sample.pi) pi.push_back(json::array({a, b}));
    return json{{"t", sample.t},
                {"g1", write_graph_string(sample.g1)},
                {"v1", sample.v1},
                {"g2", write_graph_string(sample.g2)},
                {"v2", sample.v2},
                {"pi", pi},
                {"composition", write_graph_string(
                    compose(sample.g1, sample.v1, sample.g2, sample.v2, sample.pi))}};
}

namespace {

std::string block(int order, const std::vector<int>& edges,
                  const std::vector<int>& verts) {
    std::ostringstream ss;
    ss << order << ' ' << verts.size() << '\n';
    for (size_t i = 0; i < edges.size(); ++i)
        ss << (i ? " " : "") << edges[i];
    ss << '\n';
    for (size_t i = 0; i < verts.size(); ++i)
        ss << (i ? " " : "") << verts[i];
    ss << '\n';
    return ss.str();
}

} // namespace

std::string cut_to_text(const EdgeCut& cut) {
    return block(cut.order(), cut.edges, cut.side.to_list());
}

std::string separator_to_text(const ImportantSeparator& sep) {
    return block(sep.order(), sep.edges, sep.reachable.to_list());
}

} // namespace w4
