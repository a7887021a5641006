#include "w4/structure.hpp"

#include <algorithm>

#include "w4/cuts.hpp"
#include "w4/edgesum.hpp"
#include "w4/immersion.hpp"

namespace w4 {

StructureReport verify_structure_theorem(const Multigraph& g, long node_budget) {
    StructureReport rep;
    ImmersionResult w4 = contains_w4(g, node_budget);
    if (!w4.decided()) {
        rep.input_w4_free = TriBool::Unknown;
        return rep;
    }
    rep.input_w4_free = w4.found() ? TriBool::False : TriBool::True;
    if (w4.found()) return rep; // hypothesis fails, nothing to classify

    DecompositionForest forest = decompose(g);
    for (const Multigraph* prime : primes(forest)) {
        PrimeReport pr;
        pr.prime = *prime;
        if (is_subcubic(*prime)) {
            pr.cls = PrimeClass::Subcubic;
        } else {
            pr.cls = PrimeClass::Degree4;
            pr.internally_4ec = is_internally_k_edge_connected(*prime, 4);
            ImmersionResult pw4 = contains_w4(*prime, node_budget);
            if (pw4.decided())
                pr.w4_free = pw4.found() ? TriBool::False : TriBool::True;
            if (simplify(*prime).vertex_count() <= 20) {
                pr.tw = treewidth_exact(*prime);
            } else {
                pr.tw = treewidth_bounds(*prime);
                rep.treewidth_exact_everywhere = false;
            }
            rep.max_prime_treewidth =
                std::max(rep.max_prime_treewidth, pr.tw->upper);
            if (!pr.internally_4ec || pr.w4_free == TriBool::False)
                rep.premises_hold = false;
        }
        rep.primes.push_back(std::move(pr));
    }
    return rep;
}

} // namespace w4
