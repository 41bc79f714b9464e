// psrep: exact calculator for the principal series of the rank-4
// quaternionic and split exceptional groups off their Heisenberg parabolics.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psrep/commands.hpp"
#include "psrep/errors.hpp"

namespace {

using namespace psrep;

struct CommonOpts {
    std::string algebra;
    long long d = 4;
    bool got_d = false;
    bool json_out = false;
    bool quiet = false;
};

void add_algebra_args(CLI::App* sub, CommonOpts& o) {
    sub->add_option("algebra", o.algebra,
                    "catalog name (e6_2, e7_m5, e8_m24, f4_4, e6_6, e7_7, "
                    "e8_8, so4d)")
        ->required();
    sub->add_option("d", o.d, "parameter d for so4d (default 4)")
        ->check(CLI::NonNegativeNumber)
        ->each([&o](const std::string&) { o.got_d = true; });
}

void add_output_args(CLI::App* sub, CommonOpts& o) {
    sub->add_flag("--json", o.json_out, "emit canonical JSON");
    sub->add_flag("--quiet", o.quiet, "suppress output (exit code only)");
}

AlgebraData resolve(const CommonOpts& o) {
    if (o.algebra == "so4d" || o.algebra.rfind("so4d", 0) == 0) {
        if (o.got_d) return lookup_so4d(o.d);
        return lookup(o.algebra);  // handles so4d(8) / so4d:8 spellings
    }
    if (o.got_d)
        throw InvalidParameter("the d parameter only applies to so4d");
    return lookup(o.algebra);
}

Mu parse_mu(const std::string& s) {
    Mu mu{};
    std::size_t pos = 0;
    for (int j = 0; j < 4; ++j) {
        std::size_t next = s.find(',', pos);
        const std::string tok =
            next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        if (tok.empty() || (j < 3) != (next != std::string::npos))
            throw CLI::ValidationError("--mu", "expected four comma-separated integers");
        try {
            mu[j] = std::stoll(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--mu", "not an integer: '" + tok + "'");
        }
        pos = next == std::string::npos ? s.size() : next + 1;
    }
    return mu;
}

std::pair<long long, long long> parse_range(const std::string& s) {
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--range", "expected lo..hi");
    try {
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range", "expected lo..hi with integers");
    }
}

void emit(const CommandResult& res, const CommonOpts& o) {
    if (o.quiet) return;
    if (o.json_out)
        std::cout << res.to_json().dump(2) << "\n";
    else
        std::cout << res.text();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact principal-series calculator for rank-4 quaternionic "
                 "and split exceptional Lie algebras"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string family_str = "raw";
    std::string mu_str, nu_str, range_str = "-40..40", dot_file;
    long long max_degree = 12, max_n = 4;
    std::optional<long long> p_opt, search_degree;

    auto* c_algebras = app.add_subcommand("algebras", "list the catalog");
    add_output_args(c_algebras, o);

    auto* c_ktypes =
        app.add_subcommand("ktypes", "enumerate admissible K-types by degree");
    add_algebra_args(c_ktypes, o);
    c_ktypes->add_option("--max-degree", max_degree, "degree bound on mu");
    c_ktypes->add_option("--family", family_str, "raw | even | odd");
    add_output_args(c_ktypes, o);

    auto* c_casimir =
        app.add_subcommand("casimir", "Casimir and Omega eigenvalues");
    add_algebra_args(c_casimir, o);
    c_casimir->add_option("--mu", mu_str, "highest weight, e.g. 2,0,0,0")
        ->required();
    long long p_val = 0;
    auto* p_flag = c_casimir->add_option("--p", p_val, "character exponent p");
    c_casimir->add_option("--nu", nu_str, "induction parameter (rational N/D)");
    add_output_args(c_casimir, o);

    auto* c_edges = app.add_subcommand("edges", "admissible shifts from one K-type");
    add_algebra_args(c_edges, o);
    c_edges->add_option("--mu", mu_str, "source highest weight")->required();
    long long l_val = 0, kp_val = 0;
    c_edges->add_option("--l", l_val, "source l");
    c_edges->add_option("--source-p", kp_val, "source p");
    c_edges->add_option("--family", family_str, "raw | even | odd");
    add_output_args(c_edges, o);

    auto* c_graph = app.add_subcommand("graph", "transition graph at fixed nu");
    add_algebra_args(c_graph, o);
    c_graph->add_option("--nu", nu_str, "induction parameter")->required();
    c_graph->add_option("--max-degree", max_degree, "degree bound on mu");
    c_graph->add_option("--family", family_str, "raw | even | odd");
    c_graph->add_option("--dot", dot_file, "write DOT to this file");
    add_output_args(c_graph, o);

    auto* c_comp =
        app.add_subcommand("comp-series", "complementary series half-width");
    add_algebra_args(c_comp, o);
    std::string comp_family = "even";
    c_comp->add_option("--family", comp_family, "even | odd");
    long long sd_val = 0;
    auto* sd_flag =
        c_comp->add_option("--search-degree", sd_val, "shift search bound");
    add_output_args(c_comp, o);

    auto* c_redu =
        app.add_subcommand("reducibility", "candidate reduction points");
    add_algebra_args(c_redu, o);
    c_redu->add_option("--family", family_str, "raw | even | odd");
    c_redu->add_option("--range", range_str, "nu_tilde window lo..hi");
    c_redu->add_option("--max-degree", max_degree, "degree bound on mu");
    add_output_args(c_redu, o);

    auto* c_sub =
        app.add_subcommand("submodules", "minimal certified closed subsets");
    add_algebra_args(c_sub, o);
    c_sub->add_option("--nu", nu_str, "induction parameter")->required();
    c_sub->add_option("--family", family_str, "raw | even | odd");
    c_sub->add_option("--max-degree", max_degree, "degree bound on mu");
    add_output_args(c_sub, o);

    auto* c_minrep =
        app.add_subcommand("minrep", "minimal representation K-types at nu = a+2");
    add_algebra_args(c_minrep, o);
    c_minrep->add_option("--max-n", max_n, "shells along the K-type line");
    add_output_args(c_minrep, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Family family = parse_family(family_str);
        if (*c_algebras) {
            emit(cmd_algebras(), o);
        } else if (*c_ktypes) {
            emit(cmd_ktypes(resolve(o), max_degree, family), o);
        } else if (*c_casimir) {
            if (p_flag->count()) p_opt = p_val;
            std::optional<Rational> nu;
            if (!nu_str.empty()) nu = parse_rational(nu_str);
            emit(cmd_casimir(resolve(o), parse_mu(mu_str), p_opt, nu), o);
        } else if (*c_edges) {
            const KType k{parse_mu(mu_str), l_val, kp_val, family};
            emit(cmd_edges(resolve(o), k), o);
        } else if (*c_graph) {
            std::string dot;
            const CommandResult res =
                cmd_graph(resolve(o), parse_rational(nu_str), max_degree, family,
                          dot_file.empty() ? nullptr : &dot);
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                if (!out) throw InvalidParameter("cannot write " + dot_file);
                out << dot;
            }
            emit(res, o);
        } else if (*c_comp) {
            if (sd_flag->count()) search_degree = sd_val;
            emit(cmd_comp_series(resolve(o), parse_family(comp_family),
                                 search_degree),
                 o);
        } else if (*c_redu) {
            const auto [lo, hi] = parse_range(range_str);
            emit(cmd_reducibility(resolve(o), family, lo, hi, max_degree), o);
        } else if (*c_sub) {
            emit(cmd_submodules(resolve(o), parse_rational(nu_str), family,
                                max_degree),
                 o);
        } else if (*c_minrep) {
            emit(cmd_minrep(resolve(o), max_n), o);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
