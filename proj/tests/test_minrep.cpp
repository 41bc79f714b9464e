#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "psrep/casimir.hpp"
#include "psrep/errors.hpp"
#include "psrep/minrep.hpp"

using namespace psrep;

TEST_CASE("omega kernel contains the special-solution line") {
    auto e62 = lookup("e6_2");
    auto kernel = omega_kernel(e62, 30);
    std::set<Mu> mus;
    for (const auto& entry : kernel) mus.insert(entry.mu);
    for (long long n = 0; n <= 7; ++n)
        CHECK(mus.count(Mu{2 + n, n, n, n}) == 1);

    auto so44 = lookup_so4d(4);
    auto kernel44 = omega_kernel(so44, 12);
    std::set<Mu> mus44;
    for (const auto& entry : kernel44) mus44.insert(entry.mu);
    for (long long n = 0; n <= 3; ++n)
        CHECK(mus44.count(Mu{n, n, n, n}) == 1);

    CHECK_THROWS_AS(omega_kernel(lookup("e7_7"), 8), OmegaNotDefined);
}

TEST_CASE("the kernel quadric has off-line solutions too") {
    // Eq. (ome=0) is a signature-(3,1) quadric; the line is a special
    // solution, not the whole kernel.  (6,6,2,2) solves it for e6_2.
    auto e62 = lookup("e6_2");
    CHECK(kernel_equation_lhs(e62, Mu{6, 6, 2, 2}) == 0);
    auto kernel = omega_kernel(e62, 30);
    bool off_line = false;
    for (const auto& entry : kernel)
        if (!entry.on_line) off_line = true;
    CHECK(off_line);
}

TEST_CASE("minrep closure on the asserted scope") {
    for (const auto& alg : {lookup("e6_2"), lookup("e7_m5"), lookup_so4d(4)}) {
        INFO(alg.name);
        auto rep = minrep_ktypes(alg, 6);
        CHECK(rep.nu == Rational(alg.a + 2));
        CHECK(rep.line_asserted);
        CHECK(rep.seed_in_kernel);
        CHECK(rep.mu_inventory_is_line);
        CHECK(rep.first_step_unique);
        CHECK(rep.induction_steps_unique);
        REQUIRE(rep.shells.size() == 7);
        for (const auto& sh : rep.shells) {
            CHECK(sh.mu == Mu{alg.a + sh.n, sh.n, sh.n, sh.n});
            CHECK(sh.minrep_p == sh.n);
            CHECK(sh.kernel_p_multiplicity == sh.n / 2 + 1);
            CHECK(sh.stated_p_count == sh.n / 2);
            CHECK(sh.proper_inclusion == (sh.n >= 2));
            // the distinguished section p = n is reachable
            CHECK(std::find(sh.closure_p.begin(), sh.closure_p.end(), sh.n) !=
                  sh.closure_p.end());
        }
        // every reached mu solves the kernel equation
        std::set<Mu> kernel_mu;
        for (const auto& entry : rep.kernel) kernel_mu.insert(entry.mu);
        for (const Mu& mu : rep.mu_inventory) CHECK(kernel_mu.count(mu) == 1);
    }
}

TEST_CASE("so4d(4) with max_n = 0 reduces to the trivial K-type") {
    auto rep = minrep_ktypes(lookup_so4d(4), 0);
    CHECK(rep.nu == Rational(2));
    REQUIRE(rep.mu_inventory.size() == 1);
    CHECK(rep.mu_inventory[0] == Mu{0, 0, 0, 0});
}

TEST_CASE("so4d(d>4) runs in report mode with the -4an residual") {
    auto alg = lookup_so4d(8);
    auto rep = minrep_ktypes(alg, 3);
    CHECK_FALSE(rep.line_asserted);
    CHECK_FALSE(rep.seed_in_kernel);
    REQUIRE(rep.line_residuals.has_value());
    REQUIRE(rep.line_residuals->size() == 4);
    for (long long n = 0; n <= 3; ++n)
        CHECK((*rep.line_residuals)[n] == -4 * alg.a * n);
}

TEST_CASE("line residual vanishes identically on the asserted scope") {
    for (const auto& alg : {lookup("e6_2"), lookup("e7_m5"), lookup("e8_m24"),
                            lookup_so4d(4)})
        for (long long n = 0; n <= 50; ++n)
            CHECK(line_kernel_residual(alg, n) == 0);
}
