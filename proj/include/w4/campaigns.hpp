#ifndef W4_CAMPAIGNS_HPP
#define W4_CAMPAIGNS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "w4/edgesum.hpp"
#include "w4/multigraph.hpp"

namespace w4 {

/// Reproducibility envelope echoed into every campaign report.
struct RunConfig {
    uint64_t seed = 42;
    int trials = 500;
    int max_n = 8;        // part size cap, hub included
    long node_budget = 1'000'000;
};

/// A randomly drawn internal edge-sum instance: two connected parts with
/// hub vertices of equal degree t and a stub bijection.
struct CompositionSample {
    Multigraph g1;
    int v1;
    Multigraph g2;
    int v2;
    std::vector<std::pair<int, int>> pi;
    int t;
};

/// Deterministic sample for (seed, trial index). t is drawn from t_choices.
CompositionSample draw_composition(uint64_t seed, int trial, int max_n,
                                   const std::vector<int>& t_choices);

struct CompositionFailure {
    int trial;
    CompositionSample sample;
    InvarianceReport report;
};

struct InvarianceCampaignResult {
    RunConfig config;
    int decided = 0;
    int held = 0;
    int unknown = 0;
    std::vector<CompositionFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// W4 containment of the composition vs the parts, over seeded random
/// internal edge-sums with t in {1,2,3}.
InvarianceCampaignResult run_composition_invariance(const RunConfig& config);

struct PartImmersionCampaignResult {
    RunConfig config;
    int succeeded = 0;
    std::vector<CompositionFailure> failures; // part failed to immerse
    bool passed() const { return failures.empty(); }
};

/// Both parts must immerse in their composition (t in {1,2,3}).
PartImmersionCampaignResult run_part_immersion(const RunConfig& config);

struct RoundTripCampaignResult {
    RunConfig config;
    int checked = 0;
    std::vector<std::pair<int, std::string>> failures; // trial, reason
    bool passed() const { return failures.empty(); }
};

/// decompose -> recompose -> isomorphism, plus primality of every leaf.
RoundTripCampaignResult run_decomposition_roundtrip(const RunConfig& config);
bool check_roundtrip(const Multigraph& g, std::string* reason = nullptr);

struct WitnessSearchResult {
    bool found = false;
    bool budget_exhausted = false;
    std::optional<CompositionSample> witness;
    std::optional<InvarianceReport> report;
    long candidates_tried = 0;
};

/// Order-4 edge-sum witness whose composition gains a W4 immersion even
/// though neither part has one; searched over seeded parts with <= 6
/// vertices within the candidate budget.
WitnessSearchResult search_order4_witness(uint64_t seed, long max_candidates,
                                          long node_budget = 1'000'000);

/// Hand-built order-4 witness pair: two 4-vertex parts (trivially without
/// any W4 model) whose composition contains one.
CompositionSample bundled_order4_witness();

/// Connected seeded random multigraph (components stitched together).
Multigraph random_connected_multigraph(int n, int m, int max_multiplicity,
                                       uint64_t seed);

} // namespace w4

#endif
