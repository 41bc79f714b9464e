#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "psrep/ktype.hpp"

using namespace psrep;

namespace {

// Independent oracle: test every (mu, l, p) by the raw conditions, without
// going through admissible_q_bound.
bool oracle_admissible(const AlgebraData& alg, const Mu& mu, long long q) {
    for (long long m : mu)
        if (m < 0) return false;
    for (long long m : mu)
        if (((m - q) % 2 + 2) % 2 != 0) return false;
    const long long aq = q < 0 ? -q : q;
    if (alg.case_tag == CaseTag::QuaternionicGeneric)
        return mu[0] >= aq && mu[1] >= mu[2] && mu[2] >= mu[3] && mu[3] >= aq;
    if (alg.case_tag == CaseTag::SplitExceptional)
        return mu[0] >= mu[1] && mu[1] >= mu[2] && mu[2] >= mu[3] && mu[3] >= aq;
    if (alg.d == 4)
        return mu[0] >= aq && mu[1] >= aq && mu[2] >= aq && mu[3] >= aq;
    return mu[0] >= aq && mu[1] >= aq && mu[2] >= mu[3] && mu[3] >= aq;
}

std::vector<KType> oracle_enumerate(const AlgebraData& alg, long long max_degree,
                                    Family family) {
    std::vector<KType> out;
    for (long long m1 = 0; m1 <= max_degree; ++m1)
        for (long long m2 = 0; m2 + m1 <= max_degree; ++m2)
            for (long long m3 = 0; m3 + m1 + m2 <= max_degree; ++m3)
                for (long long m4 = 0; m4 + m1 + m2 + m3 <= max_degree; ++m4) {
                    const Mu mu = {m1, m2, m3, m4};
                    const long long cap = max_degree + 2;
                    for (long long l = -cap; l <= cap; ++l)
                        for (long long p = -cap; p <= cap; ++p) {
                            if (family == Family::Even && p < 0) continue;
                            if (family == Family::Odd && p <= 0) continue;
                            if (!oracle_admissible(alg, mu, l)) continue;
                            if (!oracle_admissible(alg, mu, p)) continue;
                            out.push_back({mu, l, p, family});
                        }
                }
    std::sort(out.begin(), out.end(), KTypeOrder{});
    return out;
}

}  // namespace

TEST_CASE("pointwise admissibility checks") {
    CHECK(is_admissible(lookup("e7_7"), Mu{3, 1, 1, 1}, 1));
    for (const auto& alg : named_catalog())
        CHECK(is_admissible(alg, Mu{0, 0, 0, 0}, 0));
    CHECK_FALSE(is_admissible(lookup("e6_2"), Mu{1, 1, 3, 1}, 1));
    // parity violations
    CHECK_FALSE(is_admissible(lookup("e6_2"), Mu{2, 1, 1, 1}, 1));
    CHECK_FALSE(is_admissible(lookup("e6_2"), Mu{1, 1, 1, 1}, 0));
}

TEST_CASE("enumeration boundary cases") {
    auto so44 = lookup_so4d(4);
    auto only = enumerate(so44, 0, Family::Even);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == KType{{0, 0, 0, 0}, 0, 0, Family::Even});

    auto odd = enumerate(lookup("e6_2"), 4, Family::Odd);
    auto has = [&odd](const KType& k) {
        return std::find(odd.begin(), odd.end(), k) != odd.end();
    };
    CHECK(has(KType{{1, 1, 1, 1}, 1, 1, Family::Odd}));
    CHECK(has(KType{{1, 1, 1, 1}, -1, 1, Family::Odd}));
}

TEST_CASE("enumerate agrees with the brute-force oracle") {
    std::vector<AlgebraData> algs = {lookup("e6_2"), lookup("f4_4"),
                                     lookup("e7_7"), lookup("e6_6"),
                                     lookup_so4d(4), lookup_so4d(5),
                                     lookup_so4d(8)};
    for (const auto& alg : algs)
        for (Family fam : {Family::Raw, Family::Even, Family::Odd}) {
            INFO(alg.name << " family " << to_string(fam));
            auto got = enumerate(alg, 6, fam);
            auto want = oracle_enumerate(alg, 6, fam);
            REQUIRE(got.size() == want.size());
            CHECK(got == want);
        }
}

TEST_CASE("parity coherence across enumerated triples") {
    for (const auto& alg : named_catalog())
        for (const KType& k : enumerate(alg, 5, Family::Raw)) {
            const long long par = ((k.p % 2) + 2) % 2;
            for (long long m : k.mu) CHECK(((m % 2) + 2) % 2 == par);
            CHECK(((k.l % 2) + 2) % 2 == par);
        }
}

TEST_CASE("p_multiplicity counts and family split") {
    auto e62 = lookup("e6_2");
    CHECK(p_multiplicity(e62, Mu{6, 4, 4, 4}, Family::Even) == 3);  // p in {0,2,4}
    CHECK(p_multiplicity(e62, Mu{0, 0, 0, 0}, Family::Even) == 1);
    CHECK(p_multiplicity(e62, Mu{3, 1, 1, 1}, Family::Odd) == 1);
    CHECK(p_multiplicity(e62, Mu{1, 2, 1, 1}, Family::Even) == 0);  // parity fails

    for (const auto& alg : named_catalog())
        for (const KType& k : enumerate(alg, 6, Family::Raw)) {
            // raw holds +-p for p > 0 and p = 0 once: raw = even + odd
            CHECK(p_multiplicity(alg, k.mu, Family::Raw) ==
                  p_multiplicity(alg, k.mu, Family::Even) +
                      p_multiplicity(alg, k.mu, Family::Odd));
        }
}

TEST_CASE("admissible_q_bound matches the pointwise predicate") {
    for (const auto& alg : named_catalog())
        for (long long m1 = 0; m1 <= 5; ++m1)
            for (long long m2 = 0; m2 <= 5; ++m2)
                for (long long m3 = 0; m3 <= 5; ++m3)
                    for (long long m4 = 0; m4 <= 5; ++m4) {
                        const Mu mu = {m1, m2, m3, m4};
                        auto bound = admissible_q_bound(alg, mu);
                        for (long long q = -7; q <= 7; ++q) {
                            const bool in_range =
                                bound && q >= -*bound && q <= *bound &&
                                ((q - m1) % 2 + 2) % 2 == 0;
                            CHECK(oracle_admissible(alg, mu, q) == in_range);
                        }
                    }
}
