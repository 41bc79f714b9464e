#include "psrep/ktype.hpp"

#include <algorithm>

#include "psrep/errors.hpp"

namespace psrep {

std::string to_string(Family f) {
    switch (f) {
        case Family::Raw: return "raw";
        case Family::Even: return "even";
        case Family::Odd: return "odd";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "raw") return Family::Raw;
    if (s == "even") return Family::Even;
    if (s == "odd") return Family::Odd;
    throw InvalidParameter("unknown family: " + s + " (expected raw|even|odd)");
}

std::string KType::str() const {
    std::string out = "(";
    for (int j = 0; j < 4; ++j)
        out += std::to_string(mu[j]) + (j < 3 ? "," : "");
    out += "; " + std::to_string(l) + "," + std::to_string(p) + ")";
    return out;
}

bool is_admissible(const AlgebraData& alg, const Mu& mu, long long q) {
    for (long long m : mu)
        if (m < 0) return false;
    const long long aq = q >= 0 ? q : -q;
    for (long long m : mu)
        if (((m - q) % 2 + 2) % 2 != 0) return false;
    switch (alg.case_tag) {
        case CaseTag::QuaternionicGeneric:
            return mu[0] >= aq && mu[1] >= mu[2] && mu[2] >= mu[3] && mu[3] >= aq;
        case CaseTag::QuaternionicSO4d:
            if (alg.d == 4)
                return mu[0] >= aq && mu[1] >= aq && mu[2] >= aq && mu[3] >= aq;
            return mu[0] >= aq && mu[1] >= aq && mu[2] >= mu[3] && mu[3] >= aq;
        case CaseTag::SplitExceptional:
            return mu[0] >= mu[1] && mu[1] >= mu[2] && mu[2] >= mu[3] && mu[3] >= aq;
    }
    return false;
}

std::optional<long long> admissible_q_bound(const AlgebraData& alg, const Mu& mu) {
    for (long long m : mu)
        if (m < 0) return std::nullopt;
    const long long par = ((mu[0] % 2) + 2) % 2;
    for (long long m : mu)
        if (((m % 2) + 2) % 2 != par) return std::nullopt;
    long long bound = 0;
    switch (alg.case_tag) {
        case CaseTag::QuaternionicGeneric:
            if (!(mu[1] >= mu[2] && mu[2] >= mu[3])) return std::nullopt;
            bound = std::min(mu[0], mu[3]);
            break;
        case CaseTag::QuaternionicSO4d:
            if (alg.d == 4) {
                bound = std::min({mu[0], mu[1], mu[2], mu[3]});
            } else {
                if (!(mu[2] >= mu[3])) return std::nullopt;
                bound = std::min({mu[0], mu[1], mu[3]});
            }
            break;
        case CaseTag::SplitExceptional:
            if (!(mu[0] >= mu[1] && mu[1] >= mu[2] && mu[2] >= mu[3]))
                return std::nullopt;
            bound = mu[3];
            break;
    }
    if (bound < par) return std::nullopt;
    return bound;
}

bool is_admissible(const AlgebraData& alg, const KType& k) {
    if (k.family == Family::Even && k.p < 0) return false;
    if (k.family == Family::Odd && k.p <= 0) return false;
    return is_admissible(alg, k.mu, k.l) && is_admissible(alg, k.mu, k.p);
}

std::vector<KType> enumerate(const AlgebraData& alg, long long max_degree,
                             Family family) {
    std::vector<KType> out;
    for (long long total = 0; total <= max_degree; ++total) {
        for (long long m1 = 0; m1 <= total; ++m1)
            for (long long m2 = 0; m2 <= total - m1; ++m2)
                for (long long m3 = 0; m3 <= total - m1 - m2; ++m3) {
                    const Mu mu = {m1, m2, m3, total - m1 - m2 - m3};
                    auto bound = admissible_q_bound(alg, mu);
                    if (!bound) continue;
                    const long long B = *bound;
                    const long long par = ((mu[0] % 2) + 2) % 2;
                    long long lo = -B;
                    if (((lo - par) % 2 + 2) % 2 != 0) ++lo;
                    const long long p0 = family == Family::Raw
                                             ? lo
                                             : (family == Family::Even ? par
                                                                       : (par == 0 ? 2 : 1));
                    for (long long l = lo; l <= B; l += 2)
                        for (long long p = p0; p <= B; p += 2)
                            out.push_back({mu, l, p, family});
                }
    }
    return out;
}

long long p_multiplicity(const AlgebraData& alg, const Mu& mu, Family family) {
    auto bound = admissible_q_bound(alg, mu);
    if (!bound) return 0;
    const long long B = *bound;
    const long long par = ((mu[0] % 2) + 2) % 2;
    // values p in [lo, B] with p == par (mod 2)
    auto count_from = [&](long long lo) {
        if (lo > B) return 0LL;
        return (B - lo) / 2 + 1;
    };
    switch (family) {
        case Family::Even: return count_from(par);
        case Family::Odd: return count_from(par == 0 ? 2 : 1);
        case Family::Raw: return 2 * count_from(par == 0 ? 2 : 1) + (par == 0 ? 1 : 0);
    }
    return 0;
}

}  // namespace psrep
