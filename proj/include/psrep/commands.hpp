#ifndef PSREP_COMMANDS_HPP
#define PSREP_COMMANDS_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "psrep/catalog.hpp"
#include "psrep/ktype.hpp"
#include "psrep/rational.hpp"

namespace psrep {

using nlohmann::json;

// Structured payload of one CLI invocation.  Serialization is canonical:
// object keys sorted, rationals rendered as "num/den" strings.  When a
// classification value exists for the query, it is attached as
// paper_expectation and compared; disagreement sets matches_paper = false
// but is never an error.
struct CommandResult {
    std::string command;
    std::string algebra;
    json parameters = json::object();
    json result = json::object();
    std::optional<json> paper_expectation;
    std::optional<bool> matches_paper;

    json to_json() const;
    std::string text() const;  // human-readable rendering
};

json mu_to_json(const Mu& mu);
json ktype_to_json(const KType& k);

CommandResult cmd_algebras();
CommandResult cmd_ktypes(const AlgebraData& alg, long long max_degree, Family family);
CommandResult cmd_casimir(const AlgebraData& alg, const Mu& mu,
                          std::optional<long long> p, std::optional<Rational> nu);
CommandResult cmd_edges(const AlgebraData& alg, const KType& k);
CommandResult cmd_graph(const AlgebraData& alg, const Rational& nu,
                        long long max_degree, Family family,
                        std::string* dot_out = nullptr);
CommandResult cmd_comp_series(const AlgebraData& alg, Family family,
                              std::optional<long long> search_degree);
CommandResult cmd_reducibility(const AlgebraData& alg, Family family,
                               long long lo, long long hi, long long max_degree);
CommandResult cmd_submodules(const AlgebraData& alg, const Rational& nu,
                             Family family, long long max_degree);
CommandResult cmd_minrep(const AlgebraData& alg, long long max_n);

}  // namespace psrep

#endif
