#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "psrep/casimir.hpp"
#include "psrep/errors.hpp"
#include "psrep/minrep.hpp"

using namespace psrep;

TEST_CASE("cas_mu fixed values") {
    CHECK(cas_mu(lookup("e7_7"), Mu{1, 1, 1, 1}) == Rational(-18));
    for (const auto& alg : named_catalog())
        CHECK(cas_mu(alg, Mu{0, 0, 0, 0}) == 0);
    CHECK(cas_mu(lookup("f4_4"), Mu{2, 0, 0, 0}) == Rational(-4));
}

TEST_CASE("cas_mu strictly decreasing in each coordinate") {
    for (const auto& alg : named_catalog())
        for (int j = 0; j < 4; ++j) {
            Mu mu = {3, 2, 2, 1};
            Rational before = cas_mu(alg, mu);
            ++mu[j];
            CHECK(cas_mu(alg, mu) < before);
        }
}

TEST_CASE("cas2_p values") {
    CHECK(cas2_p(0) == 0);
    CHECK(cas2_p(1) == Rational(-2));
    CHECK(cas2_p(3) == Rational(-18));
    CHECK(cas2_p(-3) == Rational(-18));
}

TEST_CASE("omega scope") {
    CHECK(omega_supported(lookup("e6_2")));
    CHECK(omega_supported(lookup("e7_m5")));
    CHECK(omega_supported(lookup("e8_m24")));
    CHECK(omega_supported(lookup_so4d(4)));
    CHECK(omega_supported(lookup_so4d(8)));
    CHECK_FALSE(omega_supported(lookup("f4_4")));
    CHECK_FALSE(omega_supported(lookup("e7_7")));
    CHECK_FALSE(omega_supported(lookup_so4d(5)));
    CHECK_THROWS_AS(omega_eigenvalue(lookup("e7_7"), Mu{0, 0, 0, 0}, 1),
                    OmegaNotDefined);
}

TEST_CASE("omega fixed values and the special-solution line") {
    auto e62 = lookup("e6_2");
    CHECK(omega_eigenvalue(e62, Mu{2, 0, 0, 0}, 4) == 0);
    CHECK(omega_eigenvalue(lookup_so4d(4), Mu{0, 0, 0, 0}, 2) == 0);
    for (long long n = 0; n <= 50; ++n) {
        CHECK(omega_eigenvalue(e62, Mu{2 + n, n, n, n}, 4) == 0);
    }
}

TEST_CASE("kernel equation equals omega at nu = a+2 on its common scope") {
    std::mt19937_64 rng(20260825);
    std::uniform_int_distribution<long long> coord(0, 60);
    std::vector<AlgebraData> algs = {lookup("e6_2"), lookup("e7_m5"),
                                     lookup("e8_m24"), lookup_so4d(4)};
    for (const auto& alg : algs) {
        const Rational nu(alg.a + 2);
        for (int t = 0; t < 1000; ++t) {
            const Mu mu = {coord(rng), coord(rng), coord(rng), coord(rng)};
            CHECK(omega_eigenvalue(alg, mu, nu) ==
                  Rational(kernel_equation_lhs(alg, mu)));
        }
    }
}

TEST_CASE("so4d(d>4): omega at a+2 sits 2a(a+2) below the kernel equation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> coord(0, 40);
    for (long long d : {6, 8, 10}) {
        const auto alg = lookup_so4d(d);
        const Rational nu(alg.a + 2);
        for (int t = 0; t < 200; ++t) {
            const Mu mu = {coord(rng), coord(rng), coord(rng), coord(rng)};
            CHECK(omega_eigenvalue(alg, mu, nu) -
                      Rational(kernel_equation_lhs(alg, mu)) ==
                  Rational(-2 * alg.a * (alg.a + 2)));
        }
    }
}

TEST_CASE("line residual is 0 on the asserted scope and -4an on so4d(d>4)") {
    for (const auto& alg : {lookup("e6_2"), lookup("e7_m5"), lookup("e8_m24"),
                            lookup("f4_4"), lookup_so4d(4)})
        for (long long n = 0; n <= 50; ++n)
            CHECK(line_kernel_residual(alg, n) == 0);
    for (long long d : {5, 6, 7, 8, 12}) {
        const auto alg = lookup_so4d(d);
        for (long long n = 0; n <= 50; ++n)
            CHECK(line_kernel_residual(alg, n) == -4 * alg.a * n);
    }
}
