#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "imlab/invariants.hpp"

namespace imlab {

namespace {

// General-graph augmenting search with blossom contraction (Edmonds),
// O(n^3). Deterministic: roots and neighbors are scanned in ascending order.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g), n_(g.order()), match_(static_cast<std::size_t>(n_), -1) {}

    std::vector<int> solve() {
        // greedy seed matching shortens the augmenting phase
        for (int u = 0; u < n_; ++u) {
            if (match_[u] != -1) continue;
            for (int v : g_.neighbors(u)) {
                if (match_[v] == -1) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
            }
        }
        for (int root = 0; root < n_; ++root)
            if (match_[root] == -1) try_augment(root);
        return match_;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;

    int lowest_common_base(int a, int b) const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        int cur = a;
        for (;;) {
            cur = base_[cur];
            seen[cur] = 1;
            if (match_[cur] == -1) break;  // reached the tree root
            cur = parent_[match_[cur]];
        }
        cur = b;
        for (;;) {
            cur = base_[cur];
            if (seen[cur]) return cur;
            cur = parent_[match_[cur]];
        }
    }

    void mark_blossom_path(std::vector<char>& in_blossom, int v, int stem, int child) {
        while (base_[v] != stem) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void contract(std::queue<int>& q, int v, int to) {
        int stem = lowest_common_base(v, to);
        std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
        mark_blossom_path(in_blossom, v, stem, to);
        mark_blossom_path(in_blossom, to, stem, v);
        for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
                base_[i] = stem;
                if (!used_[i]) {
                    used_[i] = 1;
                    q.push(i);
                }
            }
        }
    }

    void try_augment(int root) {
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        std::iota(base_.begin(), base_.end(), 0);
        used_.assign(static_cast<std::size_t>(n_), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    contract(q, v, to);
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        augment_along(to);
                        return;
                    }
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
    }

    void augment_along(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<int> match = BlossomSolver(g).solve();
    std::vector<EdgePair> edges;
    for (int v = 0; v < g.order(); ++v)
        if (match[v] > v) edges.emplace_back(v, match[v]);
    return Matching(std::move(edges));
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

namespace {

int brute_matching_rec(const std::vector<EdgePair>& edges, std::size_t i,
                       std::vector<char>& used) {
    while (i < edges.size() && (used[edges[i].first] || used[edges[i].second])) ++i;
    if (i == edges.size()) return 0;
    int best = brute_matching_rec(edges, i + 1, used);  // leave edge i out
    auto [u, v] = edges[i];
    used[u] = used[v] = 1;
    best = std::max(best, 1 + brute_matching_rec(edges, i + 1, used));
    used[u] = used[v] = 0;
    return best;
}

}  // namespace

int brute_matching_number(const Graph& g) {
    if (g.size() > 24)
        throw BudgetError("refusing m > 24", "brute_matching_number");
    std::vector<EdgePair> edges = g.edge_list();
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    return brute_matching_rec(edges, 0, used);
}

}  // namespace imlab
