#ifndef PSREP_MINREP_HPP
#define PSREP_MINREP_HPP

#include <optional>
#include <set>
#include <vector>

#include "psrep/catalog.hpp"
#include "psrep/ktype.hpp"
#include "psrep/rational.hpp"
#include "psrep/transition.hpp"

namespace psrep {

struct KernelEntry {
    Mu mu;
    long long p_multiplicity;  // Even-family count
    bool on_line;              // mu == (a+n, n, n, n) for some n >= 0
};

// All admissible mu within max_degree with omega_eigenvalue(mu, a+2) == 0.
// Throws OmegaNotDefined outside the Omega scope.
std::vector<KernelEntry> omega_kernel(const AlgebraData& alg, long long max_degree);

// Residual of mu = (a+n, n, n, n) in the kernel equation
// 3a(a+2) - 3(mu1+2rho1)mu1 + sum_{j>=2} (mu_j+2rho_j)mu_j; identically zero
// for the quaternionic-generic rows and so4d(4), and -4an for so4d(d), d > 4.
long long line_kernel_residual(const AlgebraData& alg, long long n);

struct MinrepShell {
    long long n;
    Mu mu;                              // (a+n, n, n, n)
    long long minrep_p;                 // the multiplicity-one section, p = n
    std::vector<long long> closure_p;   // p values reached by the raw closure
    long long kernel_p_multiplicity;    // enumerated: floor(n/2) + 1
    long long stated_p_count;           // the classification's [n/2]
    bool proper_inclusion;              // kernel_p_multiplicity > 1
};

struct MinrepReport {
    Rational nu;                        // always a + 2
    bool line_asserted;                 // false => report mode (so4d, d > 6)
    bool seed_in_kernel;
    std::vector<KType> closure;         // reachable triples, canonical order
    std::vector<Mu> mu_inventory;       // distinct mu in the closure
    std::vector<KernelEntry> kernel;    // within the scanned degree
    std::vector<MinrepShell> shells;    // per n, only when line_asserted
    bool mu_inventory_is_line;          // inventory == {(a+n, n,n,n), n<=max_n}
    bool first_step_unique;             // only (a+1,1,1,1) leaves the seed
    bool induction_steps_unique;        // only n+-1 neighbours solve the kernel eq
    // so4d d>4 finding: the line residual -4an, reported instead of asserted
    std::optional<std::vector<long long>> line_residuals;
};

// Cyclic closure of {(a,0,0,0; 0,0)} under pi(E)-edges at nu = a+2 with
// targets restricted to the Omega kernel.  For the quaternionic-generic
// algebras and so4d(4) it asserts the one-parameter K-type line; for so4d
// with d > 4 it runs in report mode and surfaces the residual instead.
MinrepReport minrep_ktypes(const AlgebraData& alg, long long max_n);

}  // namespace psrep

#endif
