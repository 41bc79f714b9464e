#ifndef PSREP_SUBMODULE_HPP
#define PSREP_SUBMODULE_HPP

#include <set>
#include <string>
#include <vector>

#include "psrep/catalog.hpp"
#include "psrep/ktype.hpp"
#include "psrep/rational.hpp"
#include "psrep/transition.hpp"

namespace psrep {

struct ReducibilityWitness {
    long long nu_tilde;
    Edge edge;  // admissible edge whose factor vanishes at nu = rho_g + nu_tilde
};

struct ReducibilityReport {
    std::vector<long long> candidates;  // sorted nu_tilde values
    std::vector<ReducibilityWitness> witnesses;  // one per candidate
    int expected_parity;   // 0 = even, 1 = odd, from the classification table
    bool all_match_parity;
};

// Integer parity of the reduction points each algebra is classified with:
// odd for e6_2, e7_m5, e7_7, e8_m24, e8_8 and so4d(d even); even for f4_4,
// e6_6 and so4d(d odd).
int expected_reducibility_parity(const AlgebraData& alg);

// Scans nu_tilde in [lo, hi]; nu_tilde is a candidate iff some admissible
// edge within max_degree has vanishing factor at nu = rho_g + nu_tilde.
ReducibilityReport reducibility_points(const AlgebraData& alg, Family family,
                                       long long lo, long long hi,
                                       long long max_degree);

struct ClosureReport {
    std::vector<std::size_t> nodes;     // reachable node indices, sorted
    bool certified_closed;              // no escaping nonzero-factor shift
    bool touches_boundary;              // some open shift leaves the graph
    // open shifts out of the reachable set (empty iff certified)
    std::vector<Edge> open_exits;
};

// Nodes reachable from seeds via nonzero-factor edges.  Certification
// re-evaluates all 64 shifts analytically at every reachable node, so a
// "certified closed" verdict is immune to graph truncation.
ClosureReport invariant_closure(const TransitionGraph& g,
                                const std::vector<KType>& seeds);

// All minimal certified-closed subsets found by scanning singleton seeds in
// canonical order.
std::vector<std::vector<KType>> finite_submodules(const AlgebraData& alg,
                                                  const Rational& nu,
                                                  Family family,
                                                  long long max_degree);

}  // namespace psrep

#endif
