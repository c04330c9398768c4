#include "imlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace imlab {

namespace {

// splitmix64: tiny, stable across platforms, good enough for sampling
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() { return splitmix64(state_); }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("Rng::below: zero bound");
    // rejection sampling keeps the distribution exactly uniform
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

bool Rng::coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

namespace gen {

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("complete_bipartite: parts must be >= 1");
    GraphBuilder builder(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) builder.add_edge(u, v);
    return builder.build();
}

Graph path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle: need n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        b.add_edge(i, i + 5);                // spokes
        b.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return b.build();
}

Graph circular_ladder(int k) {
    if (k < 3) throw GraphError("circular_ladder: need k >= 3");
    GraphBuilder b(2 * k);
    for (int i = 0; i < k; ++i) {
        b.add_edge(i, (i + 1) % k);
        b.add_edge(k + i, k + (i + 1) % k);
        b.add_edge(i, k + i);
    }
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder builder(a.order() + b.order());
    for (const auto& [u, v] : a.edge_list()) builder.add_edge(u, v);
    for (const auto& [u, v] : b.edge_list()) builder.add_edge(a.order() + u, a.order() + v);
    return builder.build();
}

Graph prism_with_isolates() {
    return disjoint_union(circular_ladder(3), empty_graph(3));
}

Graph random_regular(int n, int r, std::uint64_t seed, int max_retries) {
    if (r < 0 || n < 0) throw GraphError("random_regular: negative parameters");
    if (r >= n && !(r == 0 && n == 0))
        throw GraphError("random_regular: need r < n");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw GraphError("random_regular: n*r must be even");
    Rng rng(seed);
    std::vector<int> points(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < points.size(); ++i)
        points[i] = static_cast<int>(i) / std::max(r, 1);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // Fisher-Yates, then pair consecutive points
        std::vector<int> p = points;
        for (std::size_t i = p.size(); i > 1; --i)
            std::swap(p[i - 1], p[rng.below(i)]);
        GraphBuilder b(n);
        bool ok = true;
        std::vector<std::vector<char>> seen(static_cast<std::size_t>(n),
                                            std::vector<char>(static_cast<std::size_t>(n), 0));
        for (std::size_t i = 0; ok && i + 1 < p.size(); i += 2) {
            int u = p[i];
            int v = p[i + 1];
            if (u == v || seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
            seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
            seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
            b.add_edge(u, v);
        }
        if (ok) return b.build();
    }
    throw GraphError("random_regular: pairing retry budget exhausted after " +
                     std::to_string(max_retries) + " attempts");
}

Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    if (den == 0 || num > den) throw GraphError("random_gnp: probability must be num/den <= 1");
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(num, den)) b.add_edge(u, v);
    return b.build();
}

Graph family_gpqr(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0) throw GraphError("family_gpqr: parameters must be non-negative");
    if (p + r < 2) throw GraphError("family_gpqr: requires p + r >= 2");
    int n = 2 * p + q + r;
    GraphBuilder b(n);
    auto clique_v = [](int i) { return i; };
    auto pendant_v = [p](int i) { return p + i; };
    auto middle_v = [p](int j) { return 2 * p + j; };
    auto indep_v = [p, q](int k) { return 2 * p + q + k; };
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) b.add_edge(clique_v(i), clique_v(j));
        b.add_edge(clique_v(i), pendant_v(i));
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) b.add_edge(middle_v(i), middle_v(j));
    // every vertex of the clique-with-pendants block meets the middle clique
    for (int i = 0; i < 2 * p; ++i)
        for (int j = 0; j < q; ++j) b.add_edge(i, middle_v(j));
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < q; ++j) b.add_edge(indep_v(k), middle_v(j));
    return b.build();
}

}  // namespace gen
}  // namespace imlab
