#ifndef PSREP_KTYPE_HPP
#define PSREP_KTYPE_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "psrep/catalog.hpp"

namespace psrep {

using Mu = std::array<long long, 4>;

inline long long degree(const Mu& mu) { return mu[0] + mu[1] + mu[2] + mu[3]; }

// Raw lives in I(nu,0) = L^2(K/L0) and carries p of either sign;
// Even is the phi^+ family (p >= 0), Odd the phi^- family (p > 0).
enum class Family { Raw, Even, Odd };

std::string to_string(Family f);
Family parse_family(const std::string& s);

// A K-type parameter triple (mu; l, p).
struct KType {
    Mu mu;
    long long l = 0;
    long long p = 0;
    Family family = Family::Raw;

    friend auto operator<=>(const KType&, const KType&) = default;

    std::string str() const;
};

// Canonical ordering key (sum(mu), mu1..mu4, l, p); fixes enumeration,
// graph and JSON output byte-for-byte.
struct KTypeOrder {
    bool operator()(const KType& x, const KType& y) const {
        auto kx = std::tuple(degree(x.mu), x.mu, x.l, x.p);
        auto ky = std::tuple(degree(y.mu), y.mu, y.l, y.p);
        return kx < ky;
    }
};

// Case-dependent dominance + parity test for a pair (mu; q), where q stands
// for either character exponent l or p.
bool is_admissible(const AlgebraData& alg, const Mu& mu, long long q);

// Largest B such that (mu; q) is admissible for all |q| <= B of the right
// parity; nullopt when no q is admissible (dominance or parity fails).
std::optional<long long> admissible_q_bound(const AlgebraData& alg, const Mu& mu);

// True iff both (mu; l) and (mu; p) are admissible and p fits the family range.
bool is_admissible(const AlgebraData& alg, const KType& k);

// All admissible KTypes with degree(mu) <= max_degree, canonical order.
std::vector<KType> enumerate(const AlgebraData& alg, long long max_degree,
                             Family family);

// Number of p values in the family range with (mu; p) admissible.
long long p_multiplicity(const AlgebraData& alg, const Mu& mu, Family family);

}  // namespace psrep

#endif
