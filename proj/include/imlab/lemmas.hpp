#pragma once

#include <string>
#include <vector>

#include "imlab/graph.hpp"
#include "imlab/invariants.hpp"

namespace imlab {

// Base independent set A together with maximum independent sets X_1..X_k.
// The intersection of the X_i must be contained in A; the prefix
// intersections A_r = A cap X_1 cap ... cap X_{r-1} drive the construction.
struct IntersectionChain {
    VertexSet base;
    std::vector<VertexSet> sets;
};

// Matching inside the bipartite graph between A - (A cap X) and X - A that
// saturates every vertex of A - (A cap X). A must be independent and X a
// maximum independent set; Hall's condition is guaranteed, so failure to
// saturate raises DefectError rather than a contract error.
Matching hall_saturating_matching(const Graph& g, const VertexSet& a, const VertexSet& x,
                                  const Budget& budget = {});

struct TelescopeStep {
    int index = 0;          // r, 1-based
    VertexSet prefix;       // A_r
    VertexSet saturated;    // A_r - (A_r cap X_r), the side the matching covers
    Matching matching;      // M_r
};

struct TelescopeResult {
    std::vector<TelescopeStep> steps;
    VertexSet intersection;     // X = cap X_i
    Matching residual;          // Q, maximum matching of G[N[X]]
    Matching combined;          // M_1 u ... u M_k u Q
    int size_lower_bound = 0;   // |A| - |X| + mu(G[N[X]])

    std::string trace() const;  // printable construction ledger
};

TelescopeResult telescoping_matching(const Graph& g, const IntersectionChain& chain,
                                     const Budget& budget = {});

// For r-regular g with r > 0 and a maximum independent set X: a matching
// saturating X found in the bipartite graph between X and V - X.
Matching regular_saturating_matching(const Graph& g, const VertexSet& x,
                                     const Budget& budget = {});

}  // namespace imlab
