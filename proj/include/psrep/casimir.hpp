#ifndef PSREP_CASIMIR_HPP
#define PSREP_CASIMIR_HPP

#include <optional>

#include "psrep/catalog.hpp"
#include "psrep/ktype.hpp"
#include "psrep/rational.hpp"

namespace psrep {

struct EigenvalueReport {
    Rational cas_mu;
    Rational cas2_p;
    std::optional<Rational> omega;  // present only in the quaternionic scope
    Rational nu_used;
};

// Eigenvalue of the Casimir of k on W_mu: -(1/2) sum_j (mu_j + 2 rho_j) mu_j.
Rational cas_mu(const AlgebraData& alg, const Mu& mu);

// Eigenvalue of Cas_2 = -(1/2) H^2 on the chi^p section: -2 p^2.
Rational cas2_p(long long p);

// True for e6_2, e7_m5, e8_m24 and so4d with d even: the algebras where the
// conformally invariant operator Omega is available.
bool omega_supported(const AlgebraData& alg);

// Diagonal eigenvalue of Omega on W_{mu,p}:
//   (d-4) nu - 3 (mu1+2rho1) mu1 + sum_{j>=2} (mu_j+2rho_j) mu_j.
// Throws OmegaNotDefined outside the supported scope.
Rational omega_eigenvalue(const AlgebraData& alg, const Mu& mu, const Rational& nu);

// Left-hand side of the kernel equation
//   3a(a+2) - 3 (mu1+2rho1) mu1 + sum_{j>=2} (mu_j+2rho_j) mu_j.
// For the quaternionic-generic rows and so4d(4) this equals
// omega_eigenvalue(mu, a+2); for so4d with d > 4 the two differ (see the
// residual helpers in minrep).
long long kernel_equation_lhs(const AlgebraData& alg, const Mu& mu);

}  // namespace psrep

#endif
