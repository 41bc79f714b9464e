#include "psrep/casimir.hpp"

#include "psrep/errors.hpp"

namespace psrep {

Rational cas_mu(const AlgebraData& alg, const Mu& mu) {
    long long s = 0;
    for (int j = 0; j < 4; ++j) s += (mu[j] + 2 * alg.rho[j]) * mu[j];
    return Rational(-s, 2);
}

Rational cas2_p(long long p) { return Rational(-2 * p * p); }

bool omega_supported(const AlgebraData& alg) {
    if (alg.case_tag == CaseTag::QuaternionicSO4d) return alg.d % 2 == 0;
    return alg.name == "e6_2" || alg.name == "e7_m5" || alg.name == "e8_m24";
}

Rational omega_eigenvalue(const AlgebraData& alg, const Mu& mu, const Rational& nu) {
    if (!omega_supported(alg)) throw OmegaNotDefined(alg.name);
    Rational v = Rational(alg.d - 4) * nu;
    v -= Rational(3 * (mu[0] + 2 * alg.rho[0]) * mu[0]);
    for (int j = 1; j < 4; ++j) v += Rational((mu[j] + 2 * alg.rho[j]) * mu[j]);
    return v;
}

long long kernel_equation_lhs(const AlgebraData& alg, const Mu& mu) {
    long long v = 3 * alg.a * (alg.a + 2);
    v -= 3 * (mu[0] + 2 * alg.rho[0]) * mu[0];
    for (int j = 1; j < 4; ++j) v += (mu[j] + 2 * alg.rho[j]) * mu[j];
    return v;
}

}  // namespace psrep
