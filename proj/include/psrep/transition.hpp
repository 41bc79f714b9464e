#ifndef PSREP_TRANSITION_HPP
#define PSREP_TRANSITION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "psrep/catalog.hpp"
#include "psrep/ktype.hpp"
#include "psrep/rational.hpp"

namespace psrep {

using Sigma = std::array<int, 4>;  // entries +1/-1

// A single pi(E) shift (sigma; delta1, delta2) from an admissible source to
// an admissible target.
struct Edge {
    KType source;
    Sigma sigma;
    int delta1;
    int delta2;
    KType target;
};

// The nu-affine part of a transition coefficient: nu -> (1/2)(nu + c),
// times a suppressed c-function coefficient that is strictly positive on
// admissible targets and carried only as a flag.
struct AffineFactor {
    long long c;
    bool positivity_flag = true;

    Rational eval(const Rational& nu) const { return (nu + Rational(c)) / 2; }
};

// c = sum_j (mu_j + rho_j) sigma_j - sum_j rho_j - 2 p delta2, from the source.
AffineFactor affine_factor(const AlgebraData& alg, const Edge& e);

// Shorthand used by the unitarity/reducibility modules:
// c1 = 1 + sum_j (mu_j + rho_j) sigma_j - 2 p delta2 = c + rho_g.
long long shifted_constant(const AlgebraData& alg, const Edge& e);

// All of the 64 candidate shifts from k whose target is admissible within the
// family rules, in a fixed deterministic order (sigma index ascending with
// +1 before -1 per coordinate, then delta1, then delta2).
// Throws InvalidKType when k itself is not admissible.
std::vector<Edge> edges_from(const AlgebraData& alg, const KType& k);

// Reversal (sigma' = -sigma, delta' = -delta); satisfies
// c(e) + c(reverse(e)) = -2 rho_g.
Edge reverse(const Edge& e);

struct GraphEdge {
    std::size_t source;  // node indices
    std::size_t target;
    Sigma sigma;
    int delta1;
    int delta2;
    long long c;
    Rational factor;
    bool blocked;  // factor == 0
};

// An edge whose admissible target lies outside the degree bound; tracked so
// closure queries can tell a closed subset from a truncation artifact.
struct BoundaryEdge {
    std::size_t source;
    KType target;
    Sigma sigma;
    int delta1;
    int delta2;
    long long c;
    Rational factor;
};

struct TransitionGraph {
    AlgebraData alg;
    Rational nu;
    Family family;
    long long max_degree;
    std::vector<KType> nodes;  // canonical order
    std::map<KType, std::size_t, KTypeOrder> index;
    std::vector<GraphEdge> edges;
    std::vector<BoundaryEdge> boundary;
    std::vector<std::vector<std::size_t>> out_edges;  // per node, into edges
};

TransitionGraph build_graph(const AlgebraData& alg, const Rational& nu,
                            long long max_degree, Family family);

// Standard DOT; blocked (zero-factor) edges are drawn dashed red and every
// edge is labeled with its exact factor.
std::string to_dot(const TransitionGraph& g);

}  // namespace psrep

#endif
