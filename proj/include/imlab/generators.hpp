#pragma once

#include <cstdint>

#include "imlab/graph.hpp"

namespace imlab {

// Deterministic source of uniform values; thin wrapper so sampled graphs are
// reproducible bit-for-bit across runs and worker counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    bool coin(std::uint64_t num, std::uint64_t den);  // true with probability num/den

private:
    std::uint64_t state_;
};

namespace gen {

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);  // part A = 0..a-1, part B = a..a+b-1
Graph path(int n);
Graph cycle(int n);
Graph petersen();

// Circular ladder CL_k: two k-cycles joined by a perfect matching (k >= 3).
Graph circular_ladder(int k);
Graph disjoint_union(const Graph& a, const Graph& b);

// Triangular prism together with three isolated vertices, exactly as used by
// the bound-equality probe. Vertices 0..2 and 3..5 are the triangles
// (i adjacent to i+3), vertices 6..8 are isolated.
Graph prism_with_isolates();

// Simple r-regular graph sampled by the pairing model with rejection of
// loops and multi-edges. Deterministic given seed; throws GraphError after
// max_retries failed pairings or when n*r is odd / r >= n.
Graph random_regular(int n, int r, std::uint64_t seed, int max_retries = 500);

// G(n, p) with edge probability num/den, deterministic given seed.
Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

// Clique-with-pendants joined to a clique joined to an independent set.
// Layout: clique block 0..p-1, pendants p..2p-1 (pendant p+i adjacent to
// clique vertex i), middle clique 2p..2p+q-1, independent block
// 2p+q..2p+q+r-1. Every vertex of the first two blocks and every vertex of
// the independent block is adjacent to every middle-clique vertex.
// Requires p + r >= 2.
Graph family_gpqr(int p, int q, int r);

}  // namespace gen
}  // namespace imlab
