#ifndef PSREP_UNITARITY_HPP
#define PSREP_UNITARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "psrep/catalog.hpp"
#include "psrep/ktype.hpp"
#include "psrep/rational.hpp"
#include "psrep/transition.hpp"

namespace psrep {

enum class SignPair { SameSign, OppositeSign, Degenerate };

std::string to_string(SignPair s);

// Evaluates the pair of linear functions attached to an edge,
//   L1 = nu + sum_j (mu_j+rho_j) sigma_j - sum_j rho_j - 2 p delta2
//   L2 = -(nu - sum_j (mu_j+sigma_j+rho_j) sigma_j - sum_j rho_j
//         + 2 (p+delta2) delta2),
// equivalently L1 = (nu - rho_g) + c1, L2 = c1 - (nu - rho_g) with
// c1 = shifted_constant(e).
struct SignPairResult {
    SignPair verdict;
    Rational l1;
    Rational l2;
};

SignPairResult sign_pair(const AlgebraData& alg, const Rational& nu, const Edge& e);

struct CompSeriesWitness {
    Edge edge;
    long long minimand;  // 1 + sum_j (mu_j+rho_j) sigma_j - 2 p delta2
};

// One sampled point of the odd-family verification: an admissible edge whose
// two linear functions take different values at nu.
struct OddSample {
    Rational nu;
    Edge edge;
    Rational l1;
    Rational l2;
};

struct CompSeriesBound {
    long long bound = 0;  // 0 means "none": no complementary series
    std::optional<CompSeriesWitness> witness;
    std::optional<std::string> none_reason;
    std::vector<OddSample> odd_samples;  // grid over (rho_g - 1, rho_g + 1)
    long long search_degree = 0;
};

long long default_search_degree(const AlgebraData& alg);

// The half-width of the complementary series interval around nu = rho_g:
// the minimum of |1 + sum_j (mu_j+rho_j) sigma_j - 2 p delta2| over all
// admissible shifts.  For the Odd family the answer is always "none": the
// two linear functions of an edge take different values off the unitary
// axis, so no real interval survives.
CompSeriesBound comp_series_bound(const AlgebraData& alg, Family family,
                                  long long search_degree);

inline CompSeriesBound comp_series_bound(const AlgebraData& alg, Family family) {
    return comp_series_bound(alg, family, default_search_degree(alg));
}

// The value Theorem-level classification predicts: 1 or 0 ("none").
long long expected_comp_series_bound(const AlgebraData& alg, Family family);

}  // namespace psrep

#endif
