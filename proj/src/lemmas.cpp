#include "imlab/lemmas.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace imlab {

namespace {

void require_independent(const Graph& g, const VertexSet& s, const char* name) {
    if (!is_independent_set(g, s))
        throw ContractError(std::string(name) + " is not an independent set");
}

void require_maximum_independent(const Graph& g, const VertexSet& s, const Budget& budget,
                                 const char* name) {
    require_independent(g, s, name);
    if (static_cast<int>(s.size()) != independence_number(g, budget))
        throw ContractError(std::string(name) + " is not a maximum independent set");
}

// Kuhn augmenting-path search saturating `left` into `right`, scanning in
// ascending order so the witness is deterministic.
Matching bipartite_saturating_matching(const Graph& g, const VertexSet& left,
                                       const VertexSet& right, const char* who) {
    std::vector<int> match_of_right(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> match_of_left(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> in_right(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : right.members()) in_right[static_cast<std::size_t>(v)] = 1;

    std::vector<char> visited;
    // free right-vertices are taken before rematching, so witnesses follow
    // the ascending scan order
    auto try_augment = [&](auto&& self, Vertex u) -> bool {
        for (Vertex w : g.neighbors(u)) {
            if (!in_right[static_cast<std::size_t>(w)] || visited[static_cast<std::size_t>(w)])
                continue;
            if (match_of_right[static_cast<std::size_t>(w)] == -1) {
                match_of_right[static_cast<std::size_t>(w)] = u;
                match_of_left[static_cast<std::size_t>(u)] = w;
                return true;
            }
        }
        for (Vertex w : g.neighbors(u)) {
            if (!in_right[static_cast<std::size_t>(w)] || visited[static_cast<std::size_t>(w)])
                continue;
            visited[static_cast<std::size_t>(w)] = 1;
            if (self(self, match_of_right[static_cast<std::size_t>(w)])) {
                match_of_right[static_cast<std::size_t>(w)] = u;
                match_of_left[static_cast<std::size_t>(u)] = w;
                return true;
            }
        }
        return false;
    };

    for (Vertex u : left.members()) {
        visited.assign(static_cast<std::size_t>(g.order()), 0);
        if (!try_augment(try_augment, u))
            throw DefectError(std::string(who) +
                              ": failed to saturate vertex " + std::to_string(u) +
                              " although Hall's condition is guaranteed");
    }
    std::vector<EdgePair> edges;
    for (Vertex u : left.members()) {
        Vertex w = match_of_left[static_cast<std::size_t>(u)];
        edges.emplace_back(std::min(u, w), std::max(u, w));
    }
    return Matching(std::move(edges));
}

}  // namespace

Matching hall_saturating_matching(const Graph& g, const VertexSet& a, const VertexSet& x,
                                  const Budget& budget) {
    require_valid_for(g, a, "hall_saturating_matching");
    require_valid_for(g, x, "hall_saturating_matching");
    require_independent(g, a, "A");
    require_maximum_independent(g, x, budget, "X");
    VertexSet left = set_difference(a, x);
    VertexSet right = set_difference(x, a);
    return bipartite_saturating_matching(g, left, right, "hall_saturating_matching");
}

TelescopeResult telescoping_matching(const Graph& g, const IntersectionChain& chain,
                                     const Budget& budget) {
    if (chain.sets.empty()) throw ContractError("chain needs at least one maximum independent set");
    require_valid_for(g, chain.base, "telescoping_matching");
    require_independent(g, chain.base, "chain base");
    for (const auto& x : chain.sets)
        require_maximum_independent(g, x, budget, "chain set");

    VertexSet intersection = chain.sets.front();
    for (const auto& x : chain.sets) intersection = set_intersection(intersection, x);
    if (!chain.base.contains_all(intersection))
        throw ContractError("chain base must contain the intersection of the chain sets");

    TelescopeResult result;
    result.intersection = intersection;

    VertexSet prefix = chain.base;  // A_1 = A
    Matching combined;
    for (std::size_t r = 0; r < chain.sets.size(); ++r) {
        const VertexSet& x_r = chain.sets[r];
        VertexSet saturated = set_difference(prefix, x_r);
        Matching m_r = bipartite_saturating_matching(g, saturated, set_difference(x_r, prefix),
                                                     "telescoping_matching");
        combined = combine_disjoint(combined, m_r);
        result.steps.push_back({static_cast<int>(r) + 1, prefix, saturated, m_r});
        prefix = set_intersection(prefix, x_r);
    }

    auto closed = induced_subgraph(g, closed_neighborhood(g, intersection));
    Matching q_local = maximum_matching(closed.graph);
    std::vector<EdgePair> q_edges;
    for (const auto& [u, v] : q_local.edges())
        q_edges.emplace_back(closed.new_to_old[static_cast<std::size_t>(u)],
                             closed.new_to_old[static_cast<std::size_t>(v)]);
    result.residual = Matching(std::move(q_edges));
    result.combined = combine_disjoint(combined, result.residual);
    result.size_lower_bound = static_cast<int>(chain.base.size()) -
                              static_cast<int>(intersection.size()) +
                              static_cast<int>(result.residual.size());

    // the lemma proves these; treat any failure as an implementation defect
    require_valid_matching(g, result.combined, "telescoping_matching");
    VertexSet inside = closed_neighborhood(g, chain.base);
    for (const auto& [u, v] : result.combined.edges())
        if (!inside.contains(u) || !inside.contains(v))
            throw DefectError("telescoping_matching: edge escapes G[N[A]]");
    if (static_cast<int>(result.combined.size()) < result.size_lower_bound)
        throw DefectError("telescoping_matching: size bound |A| - |X| + mu(G[N[X]]) violated");
    return result;
}

std::string TelescopeResult::trace() const {
    std::ostringstream os;
    for (const auto& step : steps) {
        os << "step r=" << step.index << ": A_r = " << step.prefix.to_string()
           << ", saturated A_r - X_r = " << step.saturated.to_string()
           << ", M_r = " << step.matching.to_string() << '\n';
    }
    os << "X = " << intersection.to_string() << '\n';
    os << "Q (maximum matching of G[N[X]]) = " << residual.to_string() << '\n';
    os << "combined M = " << combined.to_string() << '\n';
    os << "|M| = " << combined.size() << " >= |A| - |X| + mu(G[N[X]]) = " << size_lower_bound
       << '\n';
    return os.str();
}

Matching regular_saturating_matching(const Graph& g, const VertexSet& x, const Budget& budget) {
    require_valid_for(g, x, "regular_saturating_matching");
    if (!g.is_regular() || g.max_degree() == 0)
        throw ContractError("regular_saturating_matching: graph must be r-regular with r > 0");
    require_maximum_independent(g, x, budget, "X");
    return bipartite_saturating_matching(g, x, set_difference(g.vertex_set(), x),
                                         "regular_saturating_matching");
}

}  // namespace imlab
