#include "psrep/minrep.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "psrep/casimir.hpp"
#include "psrep/errors.hpp"

namespace psrep {

namespace {

bool on_minrep_line(const AlgebraData& alg, const Mu& mu) {
    const long long n = mu[1];
    return n >= 0 && mu[0] == alg.a + n && mu[2] == n && mu[3] == n;
}

}  // namespace

std::vector<KernelEntry> omega_kernel(const AlgebraData& alg, long long max_degree) {
    if (!omega_supported(alg)) throw OmegaNotDefined(alg.name);
    const Rational nu(alg.a + 2);
    std::vector<KernelEntry> out;
    for (long long total = 0; total <= max_degree; ++total)
        for (long long m1 = 0; m1 <= total; ++m1)
            for (long long m2 = 0; m2 <= total - m1; ++m2)
                for (long long m3 = 0; m3 <= total - m1 - m2; ++m3) {
                    const Mu mu = {m1, m2, m3, total - m1 - m2 - m3};
                    if (!admissible_q_bound(alg, mu)) continue;
                    if (omega_eigenvalue(alg, mu, nu) != 0) continue;
                    out.push_back({mu, p_multiplicity(alg, mu, Family::Even),
                                   on_minrep_line(alg, mu)});
                }
    return out;
}

long long line_kernel_residual(const AlgebraData& alg, long long n) {
    const Mu mu = {alg.a + n, n, n, n};
    return kernel_equation_lhs(alg, mu);
}

MinrepReport minrep_ktypes(const AlgebraData& alg, long long max_n) {
    if (!omega_supported(alg)) throw OmegaNotDefined(alg.name);
    MinrepReport rep;
    rep.nu = Rational(alg.a + 2);
    rep.line_asserted =
        alg.case_tag == CaseTag::QuaternionicGeneric || alg.d == 4;

    const long long degree_cap = alg.a + 4 * max_n;
    rep.kernel = omega_kernel(alg, degree_cap + 4);
    std::set<Mu> kernel_mu;
    for (const auto& entry : rep.kernel) kernel_mu.insert(entry.mu);

    const KType seed{{alg.a, 0, 0, 0}, 0, 0, Family::Even};
    rep.seed_in_kernel = kernel_mu.count(seed.mu) > 0;

    // reachability over nonzero-factor edges whose target mu stays in the
    // kernel, capped at the degree of the n = max_n shell
    std::set<KType, KTypeOrder> closure;
    if (rep.seed_in_kernel && is_admissible(alg, seed)) {
        closure.insert(seed);
        std::deque<KType> queue{seed};
        while (!queue.empty()) {
            const KType k = queue.front();
            queue.pop_front();
            for (const Edge& e : edges_from(alg, k)) {
                if (degree(e.target.mu) > degree_cap) continue;
                if (!kernel_mu.count(e.target.mu)) continue;
                if (affine_factor(alg, e).eval(rep.nu) == 0) continue;
                if (closure.insert(e.target).second) queue.push_back(e.target);
            }
        }
    }
    rep.closure.assign(closure.begin(), closure.end());

    std::set<Mu> inventory;
    for (const KType& k : rep.closure) inventory.insert(k.mu);
    rep.mu_inventory.assign(inventory.begin(), inventory.end());

    // does the inventory equal the line (a+n, n, n, n), 0 <= n <= max_n?
    rep.mu_inventory_is_line = true;
    {
        std::set<Mu> line;
        for (long long n = 0; n <= max_n; ++n)
            line.insert({alg.a + n, n, n, n});
        rep.mu_inventory_is_line = inventory == line;
    }

    // first step: among all 16 mu-shifts of (a,0,0,0), only (a+1,1,1,1) is
    // admissible with kernel-equation value zero
    rep.first_step_unique = true;
    rep.induction_steps_unique = true;
    if (rep.line_asserted) {
        for (long long n = 0; n <= max_n; ++n) {
            const Mu node = {alg.a + n, n, n, n};
            for (int s = 0; s < 16; ++s) {
                Mu t;
                for (int j = 0; j < 4; ++j)
                    t[j] = node[j] + (((s >> j) & 1) ? -1 : +1);
                if (!admissible_q_bound(alg, t)) continue;
                if (omega_eigenvalue(alg, t, rep.nu) != 0) continue;
                const bool neighbour =
                    on_minrep_line(alg, t) &&
                    (t[1] == n + 1 || t[1] == n - 1);
                if (!neighbour) {
                    if (n == 0) rep.first_step_unique = false;
                    rep.induction_steps_unique = false;
                }
            }
        }

        std::map<long long, MinrepShell> shells;
        for (long long n = 0; n <= max_n; ++n) {
            MinrepShell sh;
            sh.n = n;
            sh.mu = {alg.a + n, n, n, n};
            sh.minrep_p = n;
            sh.kernel_p_multiplicity = p_multiplicity(alg, sh.mu, Family::Even);
            sh.stated_p_count = n / 2;
            sh.proper_inclusion = sh.kernel_p_multiplicity > 1;
            shells[n] = sh;
        }
        for (const KType& k : rep.closure) {
            auto it = shells.find(k.mu[1]);
            if (it != shells.end() && on_minrep_line(alg, k.mu)) {
                auto& ps = it->second.closure_p;
                if (std::find(ps.begin(), ps.end(), k.p) == ps.end())
                    ps.push_back(k.p);
            }
        }
        for (auto& [n, sh] : shells) {
            std::sort(sh.closure_p.begin(), sh.closure_p.end());
            rep.shells.push_back(sh);
        }
    } else {
        std::vector<long long> residuals;
        for (long long n = 0; n <= max_n; ++n)
            residuals.push_back(line_kernel_residual(alg, n));
        rep.line_residuals = residuals;
    }
    return rep;
}

}  // namespace psrep
