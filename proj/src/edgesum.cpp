#include "w4/edgesum.hpp"

#include <algorithm>
#include <stdexcept>

#include "w4/immersion.hpp"

namespace w4 {

namespace {

void check_pi(const Multigraph& g1, int v1, const Multigraph& g2, int v2,
              const std::vector<std::pair<int, int>>& pi) {
    int t = static_cast<int>(pi.size());
    if (t < 1) throw std::invalid_argument("edge-sum needs t >= 1");
    if (g1.degree(v1) != t || g2.degree(v2) != t)
        throw std::invalid_argument("hub degree does not match |pi|");
    std::vector<bool> seen1(t, false), seen2(t, false);
    for (auto [i, j] : pi) {
        if (i < 0 || i >= t || j < 0 || j >= t || seen1[i] || seen2[j])
            throw std::invalid_argument("pi is not a bijection over the stubs");
        seen1[i] = seen2[j] = true;
    }
}

} // namespace

Multigraph compose(const Multigraph& g1, int v1, const Multigraph& g2, int v2,
                   const std::vector<std::pair<int, int>>& pi) {
    check_pi(g1, v1, g2, v2, pi);
    auto del1 = delete_vertex(g1, v1);
    auto del2 = delete_vertex(g2, v2);
    int offset = del1.graph.vertex_count();
    std::vector<std::pair<int, int>> edges = del1.graph.edges();
    for (auto [u, v] : del2.graph.edges())
        edges.emplace_back(u + offset, v + offset);
    const auto& stubs1 = g1.incident_edges(v1);
    const auto& stubs2 = g2.incident_edges(v2);
    for (auto [i, j] : pi) {
        int x = g1.other_end(stubs1[i], v1);
        int y = g2.other_end(stubs2[j], v2);
        edges.emplace_back(del1.vertex_map[x], del2.vertex_map[y] + offset);
    }
    return Multigraph(offset + del2.graph.vertex_count(), std::move(edges));
}

namespace {

// build one part: induced side + fresh hub, and report where each cut
// edge's stub landed in the hub's incidence list
struct Part {
    Multigraph graph;
    int hub;
    std::vector<int> stub_pos; // per cut edge, position in incident_edges(hub)
    std::vector<int> side;     // parent ids, sorted = part id order
};

Part build_part(const Multigraph& g, const std::vector<int>& cut_edges,
                const VertexSet& side) {
    Part part;
    part.side = side.to_list();
    int k = static_cast<int>(part.side.size());
    std::vector<int> to_part(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) to_part[part.side[i]] = i;
    part.hub = k;

    // tag stub edges so their final indices can be recovered after the
    // canonical sort inside Multigraph
    struct Tagged { std::pair<int, int> e; int tag; };
    std::vector<Tagged> tagged;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (to_part[u] != -1 && to_part[v] != -1 &&
            std::find(cut_edges.begin(), cut_edges.end(), e) == cut_edges.end())
            tagged.push_back({{to_part[u], to_part[v]}, -1});
    }
    for (size_t c = 0; c < cut_edges.size(); ++c) {
        auto [u, v] = g.edge(cut_edges[c]);
        int inside = to_part[u] != -1 ? to_part[u] : to_part[v];
        tagged.push_back({{inside, part.hub}, static_cast<int>(c)});
    }
    for (auto& tg : tagged)
        if (tg.e.first > tg.e.second) std::swap(tg.e.first, tg.e.second);
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const Tagged& a, const Tagged& b) { return a.e < b.e; });
    std::vector<std::pair<int, int>> edges;
    std::vector<int> final_index(cut_edges.size(), -1);
    for (size_t i = 0; i < tagged.size(); ++i) {
        edges.push_back(tagged[i].e);
        if (tagged[i].tag >= 0) final_index[tagged[i].tag] = static_cast<int>(i);
    }
    part.graph = Multigraph(k + 1, std::move(edges));

    const auto& incid = part.graph.incident_edges(part.hub);
    part.stub_pos.resize(cut_edges.size());
    for (size_t c = 0; c < cut_edges.size(); ++c) {
        auto it = std::find(incid.begin(), incid.end(), final_index[c]);
        part.stub_pos[c] = static_cast<int>(it - incid.begin());
    }
    return part;
}

bool is_internal_cut(const Multigraph& g, const std::vector<int>& cut_edges) {
    if (cut_edges.empty()) return false;
    EdgeSet mask(g.edge_count());
    for (int e : cut_edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        mask.set(e);
    }
    int base = component_count(g);
    Multigraph cutg = delete_edges(g, mask).graph;
    if (component_count(cutg) != base + 1) return false;
    for (size_t i = 0; i < cut_edges.size(); ++i) {
        EdgeSet sub(g.edge_count());
        for (size_t j = 0; j < cut_edges.size(); ++j)
            if (j != i) sub.set(cut_edges[j]);
        if (sub.any() && component_count(delete_edges(g, sub).graph) > base)
            return false; // a proper subset already cuts
    }
    return true;
}

} // namespace

SplitParts split(const Multigraph& g, const EdgeCut& cut) {
    if (component_count(g) != 1)
        throw std::invalid_argument("split expects a connected graph");
    if (!is_internal_cut(g, cut.edges))
        throw std::invalid_argument("split needs a minimal cut");
    VertexSet sideB = cut.side;
    VertexSet sideA = ~sideB;
    if (sideA.count() < 2 || sideB.count() < 2)
        throw std::invalid_argument("split needs an internal cut (both sides >= 2)");
    for (int e : cut.edges) {
        auto [u, v] = g.edge(e);
        if (sideB.test(u) == sideB.test(v))
            throw std::invalid_argument("cut side inconsistent with cut edges");
    }
    Part p1 = build_part(g, cut.edges, sideA);
    Part p2 = build_part(g, cut.edges, sideB);
    std::vector<std::pair<int, int>> pi;
    for (size_t c = 0; c < cut.edges.size(); ++c)
        pi.emplace_back(p1.stub_pos[c], p2.stub_pos[c]);
    return {std::move(p1.graph), p1.hub, std::move(p2.graph), p2.hub,
            std::move(pi), std::move(p1.side), std::move(p2.side)};
}

DecompositionTree decompose_tree(const Multigraph& g) {
    if (component_count(g) != 1)
        throw std::invalid_argument("decompose_tree expects a connected graph");
    auto node = std::make_unique<DecompositionNode>();
    auto cuts = enumerate_internal_cuts(g, 3);
    if (cuts.empty()) {
        node->prime = g;
        return node;
    }
    const EdgeCut& cut = cuts.front(); // smallest order, lexicographic
    SplitParts parts = split(g, cut);
    node->t = cut.order();
    node->cut_edges = cut.edges;
    node->pi = parts.pi;
    node->v1 = parts.v1;
    node->v2 = parts.v2;
    node->relabel.resize(g.vertex_count());
    for (size_t i = 0; i < parts.side1.size(); ++i)
        node->relabel[i] = parts.side1[i];
    for (size_t i = 0; i < parts.side2.size(); ++i)
        node->relabel[parts.side1.size() + i] = parts.side2[i];
    node->left = decompose_tree(parts.g1);
    node->right = decompose_tree(parts.g2);
    return node;
}

Multigraph recompose(const DecompositionNode& node) {
    if (node.is_leaf()) return *node.prime;
    Multigraph merged = compose(recompose(*node.left), node.v1,
                                recompose(*node.right), node.v2, node.pi);
    return relabel(merged, node.relabel);
}

void collect_primes(const DecompositionNode& node,
                    std::vector<const Multigraph*>& out) {
    if (node.is_leaf()) {
        out.push_back(&*node.prime);
        return;
    }
    collect_primes(*node.left, out);
    collect_primes(*node.right, out);
}

DecompositionForest decompose(const Multigraph& g) {
    DecompositionForest forest;
    for (const auto& comp : components(g)) {
        auto verts = comp.to_list();
        std::vector<int> to_local(g.vertex_count(), -1);
        for (size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            if (comp.test(u)) edges.emplace_back(to_local[u], to_local[v]);
        Multigraph sub(static_cast<int>(verts.size()), std::move(edges));
        forest.trees.push_back(decompose_tree(sub));
    }
    return forest;
}

Multigraph recompose(const DecompositionForest& forest) {
    Multigraph out(0, {});
    for (const auto& tree : forest.trees)
        out = disjoint_union(out, recompose(*tree));
    return out;
}

std::vector<const Multigraph*> primes(const DecompositionForest& forest) {
    std::vector<const Multigraph*> out;
    for (const auto& tree : forest.trees) collect_primes(*tree, out);
    return out;
}

namespace {

TriBool from_result(const ImmersionResult& r) {
    if (!r.decided()) return TriBool::Unknown;
    return r.found() ? TriBool::True : TriBool::False;
}

} // namespace

InvarianceReport check_invariance(const Multigraph& g1, int v1,
                                  const Multigraph& g2, int v2,
                                  const std::vector<std::pair<int, int>>& pi,
                                  long node_budget, bool check_part_immersion) {
    InvarianceReport rep;
    rep.t = static_cast<int>(pi.size());
    Multigraph comp = compose(g1, v1, g2, v2, pi);
    rep.g1_w4 = from_result(contains_w4(g1, node_budget));
    rep.g2_w4 = from_result(contains_w4(g2, node_budget));
    rep.composition_w4 = from_result(contains_w4(comp, node_budget));

    TriBool rhs = TriBool::Unknown;
    if (rep.g1_w4 == TriBool::True || rep.g2_w4 == TriBool::True)
        rhs = TriBool::True;
    else if (rep.g1_w4 == TriBool::False && rep.g2_w4 == TriBool::False)
        rhs = TriBool::False;
    if (rep.composition_w4 != TriBool::Unknown && rhs != TriBool::Unknown)
        rep.iff_holds = rep.composition_w4 == rhs ? TriBool::True : TriBool::False;

    if (check_part_immersion && rep.t <= 3) {
        rep.g1_immersed = from_result(find_immersion(comp, g1, node_budget));
        rep.g2_immersed = from_result(find_immersion(comp, g2, node_budget));
    }
    return rep;
}

} // namespace w4
