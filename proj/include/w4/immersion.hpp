#ifndef W4_IMMERSION_HPP
#define W4_IMMERSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "w4/multigraph.hpp"

namespace w4 {

/// A model of H in G: injective branch-vertex map plus one edge-disjoint
/// G-path per H-edge.
struct ImmersionModel {
    std::vector<int> vertex_map;            // h-vertex id -> g-vertex id
    std::vector<std::vector<int>> edge_map; // h-edge index -> g-edge indices
};

enum class SearchStatus { Found, None, BudgetExceeded };

struct ImmersionResult {
    SearchStatus status = SearchStatus::None;
    std::optional<ImmersionModel> model;
    long nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
    bool decided() const { return status != SearchStatus::BudgetExceeded; }
};

/// Checks the model invariants; on failure names the first violated one
/// in *violation. Throws on out-of-range index references.
bool verify_model(const Multigraph& g, const Multigraph& h,
                  const ImmersionModel& model, std::string* violation = nullptr);

/// Exhaustive search for a model of h in g. Deterministic; every returned
/// model passes verify_model. "None" means the search space was exhausted.
ImmersionResult find_immersion(const Multigraph& g, const Multigraph& h,
                               long node_budget = 1'000'000);

ImmersionResult contains_w4(const Multigraph& g, long node_budget = 1'000'000);

/// All automorphisms of g as id permutations (brute force; n <= 9 only,
/// identity otherwise).
std::vector<std::vector<int>> automorphisms(const Multigraph& g);

} // namespace w4

#endif
