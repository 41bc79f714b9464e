#include "psrep/unitarity.hpp"

#include <algorithm>
#include <cstdlib>

#include "psrep/errors.hpp"

namespace psrep {

std::string to_string(SignPair s) {
    switch (s) {
        case SignPair::SameSign: return "SameSign";
        case SignPair::OppositeSign: return "OppositeSign";
        case SignPair::Degenerate: return "Degenerate";
    }
    return "?";
}

SignPairResult sign_pair(const AlgebraData& alg, const Rational& nu, const Edge& e) {
    const Rational nu_tilde = nu - Rational(alg.rho_g);
    const Rational c1 = Rational(shifted_constant(alg, e));
    SignPairResult r;
    r.l1 = nu_tilde + c1;
    r.l2 = c1 - nu_tilde;
    if (r.l1 == 0 || r.l2 == 0)
        r.verdict = SignPair::Degenerate;
    else
        r.verdict = r.l1 * r.l2 > 0 ? SignPair::SameSign : SignPair::OppositeSign;
    return r;
}

long long default_search_degree(const AlgebraData& alg) {
    const long long max_rho = *std::max_element(alg.rho.begin(), alg.rho.end());
    return 8 * (1 + max_rho);
}

namespace {

// The minimand 1 + sum (mu_j+rho_j) sigma_j - 2 p delta2 has fixed parity
// 1 + d (mod 2) on the admissible lattice, giving an exact floor for the
// minimum: 0 when d is odd, 1 when d is even.
long long parity_floor(const AlgebraData& alg) { return alg.d % 2 == 0 ? 1 : 0; }

}  // namespace

CompSeriesBound comp_series_bound(const AlgebraData& alg, Family family,
                                  long long search_degree) {
    if (search_degree < 4)
        throw BoundTooSmall("search_degree must be >= 4, got " +
                            std::to_string(search_degree));
    CompSeriesBound result;
    result.search_degree = search_degree;

    if (family == Family::Odd) {
        result.bound = 0;
        result.none_reason =
            "sign mismatch: for |p| >= 1 the two linear functions of an edge "
            "take different values at every real nu off the unitary axis";
        // sample nu over (rho_g - 1, rho_g + 1) and exhibit the mismatch on
        // the first admissible odd-family edge
        std::vector<Edge> probe;
        for (const KType& k : enumerate(alg, search_degree, Family::Odd)) {
            probe = edges_from(alg, k);
            if (!probe.empty()) break;
        }
        if (!probe.empty()) {
            for (int i = -8; i <= 8; ++i) {
                if (i == 0) continue;  // the unitary axis itself
                const Rational nu = Rational(alg.rho_g) + Rational(i, 9);
                const auto sp = sign_pair(alg, nu, probe.front());
                result.odd_samples.push_back({nu, probe.front(), sp.l1, sp.l2});
            }
        }
        return result;
    }

    const long long floor = parity_floor(alg);
    std::optional<long long> best;
    std::optional<CompSeriesWitness> witness;

    for (long long total = 0; total <= search_degree; ++total) {
        for (long long m1 = 0; m1 <= total; ++m1)
            for (long long m2 = 0; m2 <= total - m1; ++m2)
                for (long long m3 = 0; m3 <= total - m1 - m2; ++m3) {
                    const Mu mu = {m1, m2, m3, total - m1 - m2 - m3};
                    auto bnd = admissible_q_bound(alg, mu);
                    if (!bnd) continue;
                    const long long par = ((mu[0] % 2) + 2) % 2;
                    for (long long p = par; p <= *bnd; p += 2) {
                        KType k{mu, par, p, family};
                        for (const Edge& e : edges_from(alg, k)) {
                            const long long m = shifted_constant(alg, e);
                            const long long am = m < 0 ? -m : m;
                            if (!best || am < *best) {
                                best = am;
                                witness = CompSeriesWitness{e, m};
                            }
                        }
                        if (best && *best == floor) goto done;
                    }
                }
    }
done:
    if (!best) {
        // no admissible edge at all inside the search bound
        result.bound = 0;
        result.none_reason = "no admissible edge within search degree";
        return result;
    }
    result.bound = *best;
    result.witness = witness;
    if (result.bound == 0)
        result.none_reason = "degenerate edge: the minimand vanishes";
    return result;
}

long long expected_comp_series_bound(const AlgebraData& alg, Family family) {
    if (family != Family::Even) return 0;
    switch (alg.case_tag) {
        case CaseTag::QuaternionicSO4d: return alg.d % 2 == 0 ? 1 : 0;
        case CaseTag::QuaternionicGeneric:
            return (alg.name == "f4_4") ? 0 : 1;
        case CaseTag::SplitExceptional:
            return (alg.name == "e6_6") ? 0 : 1;
    }
    return 0;
}

}  // namespace psrep
