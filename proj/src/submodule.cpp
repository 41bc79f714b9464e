#include "psrep/submodule.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "psrep/errors.hpp"

namespace psrep {

int expected_reducibility_parity(const AlgebraData& alg) {
    switch (alg.case_tag) {
        case CaseTag::QuaternionicSO4d: return alg.d % 2 == 0 ? 1 : 0;
        case CaseTag::QuaternionicGeneric: return alg.name == "f4_4" ? 0 : 1;
        case CaseTag::SplitExceptional: return alg.name == "e6_6" ? 0 : 1;
    }
    return 0;
}

ReducibilityReport reducibility_points(const AlgebraData& alg, Family family,
                                       long long lo, long long hi,
                                       long long max_degree) {
    // factor (1/2)(nu + c) vanishes at nu = -c, i.e. nu_tilde = -(c + rho_g)
    std::map<long long, Edge> found;
    for (const KType& k : enumerate(alg, max_degree, family))
        for (const Edge& e : edges_from(alg, k)) {
            const long long nu_tilde = -shifted_constant(alg, e);
            if (nu_tilde < lo || nu_tilde > hi) continue;
            found.emplace(nu_tilde, e);  // keeps the first witness per point
        }
    ReducibilityReport rep;
    rep.expected_parity = expected_reducibility_parity(alg);
    rep.all_match_parity = true;
    for (const auto& [nu_tilde, edge] : found) {
        rep.candidates.push_back(nu_tilde);
        rep.witnesses.push_back({nu_tilde, edge});
        if (((nu_tilde % 2) + 2) % 2 != rep.expected_parity)
            rep.all_match_parity = false;
    }
    return rep;
}

ClosureReport invariant_closure(const TransitionGraph& g,
                                const std::vector<KType>& seeds) {
    std::vector<char> in(g.nodes.size(), 0);
    std::deque<std::size_t> queue;
    for (const KType& s : seeds) {
        auto it = g.index.find(s);
        if (it == g.index.end()) throw UnknownNode("seed not in graph: " + s.str());
        if (!in[it->second]) {
            in[it->second] = 1;
            queue.push_back(it->second);
        }
    }
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t ei : g.out_edges[i]) {
            const GraphEdge& e = g.edges[ei];
            if (e.blocked) continue;
            if (!in[e.target]) {
                in[e.target] = 1;
                queue.push_back(e.target);
            }
        }
    }

    ClosureReport rep;
    rep.certified_closed = true;
    rep.touches_boundary = false;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (in[i]) rep.nodes.push_back(i);

    // certify analytically: every admissible shift with nonzero factor from a
    // reachable node must land back inside the reachable set
    for (std::size_t i : rep.nodes) {
        for (const Edge& e : edges_from(g.alg, g.nodes[i])) {
            if (affine_factor(g.alg, e).eval(g.nu) == 0) continue;
            auto it = g.index.find(e.target);
            if (it == g.index.end()) {
                rep.certified_closed = false;
                rep.touches_boundary = true;
                rep.open_exits.push_back(e);
            } else if (!in[it->second]) {
                rep.certified_closed = false;
                rep.open_exits.push_back(e);
            }
        }
    }
    return rep;
}

std::vector<std::vector<KType>> finite_submodules(const AlgebraData& alg,
                                                  const Rational& nu,
                                                  Family family,
                                                  long long max_degree) {
    const TransitionGraph g = build_graph(alg, nu, max_degree, family);
    const std::size_t n = g.nodes.size();

    // analytic successor lists over nonzero-factor shifts; npos marks an
    // admissible target outside the graph (escape through the boundary)
    constexpr std::size_t kOutside = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const Edge& e : edges_from(alg, g.nodes[i])) {
            if (affine_factor(alg, e).eval(nu) == 0) continue;
            auto it = g.index.find(e.target);
            succ[i].push_back(it == g.index.end() ? kOutside : it->second);
        }

    std::vector<std::vector<std::size_t>> closed;
    std::vector<char> seen(n, 0);
    std::vector<char> in(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::fill(in.begin(), in.end(), 0);
        std::deque<std::size_t> queue{i};
        in[i] = 1;
        bool escapes = false;
        std::vector<std::size_t> members;
        while (!queue.empty() && !escapes) {
            const std::size_t u = queue.front();
            queue.pop_front();
            members.push_back(u);
            for (std::size_t v : succ[u]) {
                if (v == kOutside) {
                    escapes = true;
                    break;
                }
                if (!in[v]) {
                    in[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        if (escapes) continue;
        std::sort(members.begin(), members.end());
        for (std::size_t j : members) seen[j] = 1;
        closed.push_back(std::move(members));
    }
    // keep only minimal sets
    std::vector<std::vector<KType>> out;
    for (std::size_t i = 0; i < closed.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < closed.size(); ++j) {
            if (i == j) continue;
            if (std::includes(closed[i].begin(), closed[i].end(),
                              closed[j].begin(), closed[j].end()) &&
                closed[j].size() < closed[i].size()) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        std::vector<KType> set;
        for (std::size_t idx : closed[i]) set.push_back(g.nodes[idx]);
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace psrep
