#include "psrep/transition.hpp"

#include <sstream>

#include "psrep/errors.hpp"

namespace psrep {

AffineFactor affine_factor(const AlgebraData& alg, const Edge& e) {
    long long c = 0;
    for (int j = 0; j < 4; ++j)
        c += (e.source.mu[j] + alg.rho[j]) * e.sigma[j];
    for (int j = 0; j < 4; ++j) c -= alg.rho[j];
    c -= 2 * e.source.p * e.delta2;
    return {c, true};
}

long long shifted_constant(const AlgebraData& alg, const Edge& e) {
    return affine_factor(alg, e).c + alg.rho_g;
}

Edge reverse(const Edge& e) {
    Edge r;
    r.source = e.target;
    r.target = e.source;
    for (int j = 0; j < 4; ++j) r.sigma[j] = -e.sigma[j];
    r.delta1 = -e.delta1;
    r.delta2 = -e.delta2;
    return r;
}

std::vector<Edge> edges_from(const AlgebraData& alg, const KType& k) {
    if (!is_admissible(alg, k))
        throw InvalidKType("inadmissible source K-type " + k.str());
    std::vector<Edge> out;
    for (int s = 0; s < 16; ++s)
        for (int d1 : {+1, -1})
            for (int d2 : {+1, -1}) {
                Edge e;
                e.source = k;
                for (int j = 0; j < 4; ++j)
                    e.sigma[j] = (s >> j) & 1 ? -1 : +1;
                e.delta1 = d1;
                e.delta2 = d2;
                e.target.family = k.family;
                for (int j = 0; j < 4; ++j) e.target.mu[j] = k.mu[j] + e.sigma[j];
                e.target.l = k.l + d1;
                e.target.p = k.p + d2;
                // phi^- vanishes at p = 0; even-family targets with p < 0 are
                // the w0-mirrors of kept edges.
                if (!is_admissible(alg, e.target)) continue;
                out.push_back(e);
            }
    return out;
}

TransitionGraph build_graph(const AlgebraData& alg, const Rational& nu,
                            long long max_degree, Family family) {
    TransitionGraph g;
    g.alg = alg;
    g.nu = nu;
    g.family = family;
    g.max_degree = max_degree;
    g.nodes = enumerate(alg, max_degree, family);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) g.index[g.nodes[i]] = i;
    g.out_edges.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (const Edge& e : edges_from(alg, g.nodes[i])) {
            const AffineFactor f = affine_factor(alg, e);
            const Rational value = f.eval(nu);
            if (degree(e.target.mu) > max_degree) {
                g.boundary.push_back(
                    {i, e.target, e.sigma, e.delta1, e.delta2, f.c, value});
                continue;
            }
            auto it = g.index.find(e.target);
            // enumerate() is complete within the bound, so the target exists
            GraphEdge ge{i,         it->second, e.sigma, e.delta1,
                         e.delta2,  f.c,        value,   value == 0};
            g.out_edges[i].push_back(g.edges.size());
            g.edges.push_back(ge);
        }
    }
    return g;
}

std::string to_dot(const TransitionGraph& g) {
    std::ostringstream os;
    os << "digraph transition {\n";
    os << "  // " << g.alg.name << ", nu = " << to_string(g.nu)
       << ", family = " << to_string(g.family) << "\n";
    os << "  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << g.nodes[i].str() << "\"];\n";
    for (const GraphEdge& e : g.edges) {
        os << "  n" << e.source << " -> n" << e.target << " [label=\""
           << to_string(e.factor) << "\"";
        if (e.blocked) os << ", color=red, style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace psrep
