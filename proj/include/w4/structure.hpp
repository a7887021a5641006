#ifndef W4_STRUCTURE_HPP
#define W4_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "w4/multigraph.hpp"
#include "w4/treewidth.hpp"
#include "w4/tribool.hpp"

namespace w4 {

enum class PrimeClass { Subcubic, Degree4 };

struct PrimeReport {
    Multigraph prime;
    PrimeClass cls = PrimeClass::Subcubic;
    // Degree4 fields
    bool internally_4ec = false;
    TriBool w4_free = TriBool::Unknown;
    std::optional<TreewidthResult> tw;
};

struct StructureReport {
    TriBool input_w4_free = TriBool::Unknown;
    std::vector<PrimeReport> primes;
    // every Degree4 prime of a W4-free input must be internally
    // 4-edge-connected and W4-free; anything else is a fatal bug
    bool premises_hold = true;
    int max_prime_treewidth = 0;
    bool treewidth_exact_everywhere = true;
};

/// Decomposes g into primes and classifies each one. Requires the input
/// to be decided W4-free first; otherwise the report only records that
/// the hypothesis failed (or is unknown).
StructureReport verify_structure_theorem(const Multigraph& g,
                                         long node_budget = 1'000'000);

} // namespace w4

#endif
