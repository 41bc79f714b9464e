#include "psrep/commands.hpp"

#include <sstream>

#include "psrep/casimir.hpp"
#include "psrep/minrep.hpp"
#include "psrep/submodule.hpp"
#include "psrep/transition.hpp"
#include "psrep/unitarity.hpp"

namespace psrep {

json CommandResult::to_json() const {
    json j;
    j["command"] = command;
    if (!algebra.empty()) j["algebra"] = algebra;
    j["parameters"] = parameters;
    j["result"] = result;
    if (paper_expectation) j["paper_expectation"] = *paper_expectation;
    if (matches_paper) j["matches_paper"] = *matches_paper;
    return j;
}

std::string CommandResult::text() const {
    std::ostringstream os;
    os << to_json().dump(2) << "\n";
    return os.str();
}

json mu_to_json(const Mu& mu) { return json{mu[0], mu[1], mu[2], mu[3]}; }

json ktype_to_json(const KType& k) {
    json j;
    j["mu"] = mu_to_json(k.mu);
    j["l"] = k.l;
    j["p"] = k.p;
    j["family"] = to_string(k.family);
    return j;
}

namespace {

json edge_to_json(const AlgebraData& alg, const Edge& e) {
    json j;
    j["source"] = ktype_to_json(e.source);
    j["target"] = ktype_to_json(e.target);
    j["sigma"] = json{e.sigma[0], e.sigma[1], e.sigma[2], e.sigma[3]};
    j["delta1"] = e.delta1;
    j["delta2"] = e.delta2;
    const AffineFactor f = affine_factor(alg, e);
    j["c"] = f.c;
    j["positivity_flag"] = f.positivity_flag;
    return j;
}

json algebra_to_json(const AlgebraData& alg) {
    json j;
    j["name"] = alg.name;
    j["case_tag"] = to_string(alg.case_tag);
    j["a"] = alg.a;
    j["d"] = alg.d;
    j["rho"] = json{alg.rho[0], alg.rho[1], alg.rho[2], alg.rho[3]};
    j["rho_g"] = alg.rho_g;
    return j;
}

}  // namespace

CommandResult cmd_algebras() {
    CommandResult res;
    res.command = "algebras";
    json rows = json::array();
    for (const AlgebraData& alg : named_catalog()) rows.push_back(algebra_to_json(alg));
    res.result["catalog"] = rows;
    res.result["note"] =
        "so4d is a one-parameter family, d >= 4; shown here with d = 4";
    return res;
}

CommandResult cmd_ktypes(const AlgebraData& alg, long long max_degree, Family family) {
    CommandResult res;
    res.command = "ktypes";
    res.algebra = alg.name;
    res.parameters["max_degree"] = max_degree;
    res.parameters["family"] = to_string(family);
    json list = json::array();
    for (const KType& k : enumerate(alg, max_degree, family))
        list.push_back(ktype_to_json(k));
    res.result["count"] = list.size();
    res.result["ktypes"] = list;
    return res;
}

CommandResult cmd_casimir(const AlgebraData& alg, const Mu& mu,
                          std::optional<long long> p, std::optional<Rational> nu) {
    CommandResult res;
    res.command = "casimir";
    res.algebra = alg.name;
    res.parameters["mu"] = mu_to_json(mu);
    if (p) res.parameters["p"] = *p;
    if (nu) res.parameters["nu"] = to_string(*nu);

    res.result["cas_mu"] = to_string(cas_mu(alg, mu));
    if (p) res.result["cas2_p"] = to_string(cas2_p(*p));
    if (nu) {
        res.result["nu_used"] = to_string(*nu);
        if (omega_supported(alg))
            res.result["omega"] = to_string(omega_eigenvalue(alg, mu, *nu));
        else
            res.result["omega"] = nullptr;
    }
    return res;
}

CommandResult cmd_edges(const AlgebraData& alg, const KType& k) {
    CommandResult res;
    res.command = "edges";
    res.algebra = alg.name;
    res.parameters["source"] = ktype_to_json(k);
    json list = json::array();
    for (const Edge& e : edges_from(alg, k)) list.push_back(edge_to_json(alg, e));
    res.result["count"] = list.size();
    res.result["edges"] = list;
    return res;
}

CommandResult cmd_graph(const AlgebraData& alg, const Rational& nu,
                        long long max_degree, Family family, std::string* dot_out) {
    CommandResult res;
    res.command = "graph";
    res.algebra = alg.name;
    res.parameters["nu"] = to_string(nu);
    res.parameters["max_degree"] = max_degree;
    res.parameters["family"] = to_string(family);

    const TransitionGraph g = build_graph(alg, nu, max_degree, family);
    json nodes = json::array();
    for (const KType& k : g.nodes) nodes.push_back(ktype_to_json(k));
    json edges = json::array();
    for (const GraphEdge& e : g.edges) {
        json j;
        j["source"] = e.source;
        j["target"] = e.target;
        j["sigma"] = json{e.sigma[0], e.sigma[1], e.sigma[2], e.sigma[3]};
        j["delta1"] = e.delta1;
        j["delta2"] = e.delta2;
        j["c"] = e.c;
        j["factor"] = to_string(e.factor);
        j["blocked"] = e.blocked;
        edges.push_back(j);
    }
    res.result["nodes"] = nodes;
    res.result["edges"] = edges;
    res.result["boundary_edge_count"] = g.boundary.size();
    if (dot_out) *dot_out = to_dot(g);
    return res;
}

CommandResult cmd_comp_series(const AlgebraData& alg, Family family,
                              std::optional<long long> search_degree) {
    CommandResult res;
    res.command = "comp-series";
    res.algebra = alg.name;
    res.parameters["family"] = to_string(family);
    const long long sd = search_degree.value_or(default_search_degree(alg));
    res.parameters["search_degree"] = sd;

    const CompSeriesBound b = comp_series_bound(alg, family, sd);
    res.result["bound"] = b.bound;
    res.result["has_complementary_series"] = b.bound > 0;
    if (b.witness) {
        res.result["witness"] = edge_to_json(alg, b.witness->edge);
        res.result["witness_minimand"] = b.witness->minimand;
    }
    if (b.none_reason) res.result["none_reason"] = *b.none_reason;
    if (!b.odd_samples.empty()) {
        json samples = json::array();
        for (const OddSample& s : b.odd_samples) {
            json j;
            j["nu"] = to_string(s.nu);
            j["l1"] = to_string(s.l1);
            j["l2"] = to_string(s.l2);
            samples.push_back(j);
        }
        res.result["odd_family_samples"] = samples;
    }

    json expect;
    expect["bound"] = expected_comp_series_bound(alg, family);
    res.paper_expectation = expect;
    res.matches_paper = b.bound == expected_comp_series_bound(alg, family);
    return res;
}

CommandResult cmd_reducibility(const AlgebraData& alg, Family family,
                               long long lo, long long hi, long long max_degree) {
    CommandResult res;
    res.command = "reducibility";
    res.algebra = alg.name;
    res.parameters["family"] = to_string(family);
    res.parameters["range"] = json{lo, hi};
    res.parameters["max_degree"] = max_degree;

    const ReducibilityReport rep = reducibility_points(alg, family, lo, hi, max_degree);
    res.result["candidates"] = rep.candidates;
    json witnesses = json::array();
    for (const auto& w : rep.witnesses) {
        json j;
        j["nu_tilde"] = w.nu_tilde;
        j["edge"] = edge_to_json(alg, w.edge);
        witnesses.push_back(j);
    }
    res.result["witnesses"] = witnesses;
    res.result["all_match_parity"] = rep.all_match_parity;

    json expect;
    expect["parity"] = rep.expected_parity == 0 ? "even" : "odd";
    res.paper_expectation = expect;
    res.matches_paper = rep.all_match_parity;
    return res;
}

CommandResult cmd_submodules(const AlgebraData& alg, const Rational& nu,
                             Family family, long long max_degree) {
    CommandResult res;
    res.command = "submodules";
    res.algebra = alg.name;
    res.parameters["nu"] = to_string(nu);
    res.parameters["family"] = to_string(family);
    res.parameters["max_degree"] = max_degree;

    json sets = json::array();
    for (const auto& sub : finite_submodules(alg, nu, family, max_degree)) {
        json members = json::array();
        for (const KType& k : sub) members.push_back(ktype_to_json(k));
        sets.push_back(members);
    }
    res.result["certified_closed_subsets"] = sets;
    res.result["count"] = sets.size();
    return res;
}

CommandResult cmd_minrep(const AlgebraData& alg, long long max_n) {
    CommandResult res;
    res.command = "minrep";
    res.algebra = alg.name;
    res.parameters["max_n"] = max_n;

    const MinrepReport rep = minrep_ktypes(alg, max_n);
    res.result["nu"] = to_string(rep.nu);
    res.result["report_mode"] = !rep.line_asserted;
    res.result["seed_in_kernel"] = rep.seed_in_kernel;

    json inventory = json::array();
    for (const Mu& mu : rep.mu_inventory) inventory.push_back(mu_to_json(mu));
    res.result["mu_inventory"] = inventory;

    json kernel = json::array();
    for (const KernelEntry& e : rep.kernel) {
        json j;
        j["mu"] = mu_to_json(e.mu);
        j["p_multiplicity"] = e.p_multiplicity;
        j["on_line"] = e.on_line;
        kernel.push_back(j);
    }
    res.result["kernel"] = kernel;

    if (rep.line_asserted) {
        json shells = json::array();
        for (const MinrepShell& sh : rep.shells) {
            json j;
            j["n"] = sh.n;
            j["mu"] = mu_to_json(sh.mu);
            j["minrep_p"] = sh.minrep_p;
            j["closure_p"] = sh.closure_p;
            j["kernel_p_multiplicity"] = sh.kernel_p_multiplicity;
            j["stated_p_count"] = sh.stated_p_count;
            j["proper_inclusion"] = sh.proper_inclusion;
            shells.push_back(j);
        }
        res.result["shells"] = shells;
        res.result["mu_inventory_is_line"] = rep.mu_inventory_is_line;
        res.result["first_step_unique"] = rep.first_step_unique;
        res.result["induction_steps_unique"] = rep.induction_steps_unique;
        res.result["p_count_note"] =
            "enumerated kernel multiplicity is floor(n/2)+1; the stated count "
            "[n/2] differs by one";

        json expect;
        json line = json::array();
        for (long long n = 0; n <= max_n; ++n)
            line.push_back(mu_to_json({alg.a + n, n, n, n}));
        expect["mu_inventory"] = line;
        res.paper_expectation = expect;
        res.matches_paper = rep.mu_inventory_is_line;
    } else {
        res.result["line_residuals"] = *rep.line_residuals;
        res.result["discrepancy_note"] =
            "substituting (a+n, n, n, n) into the kernel equation leaves the "
            "residual -4*a*n for so(4,d) with d > 4; the special-solution "
            "line is not asserted here";
    }
    return res;
}

}  // namespace psrep
