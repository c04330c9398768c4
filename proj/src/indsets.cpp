#include <algorithm>
#include <bit>
#include <vector>

#include "imlab/invariants.hpp"

namespace imlab {

namespace {

constexpr int kMaskLimit = 64;

struct MaskGraph {
    int n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> adj;       // open neighborhoods
    std::vector<std::uint64_t> non_adj;   // complement rows, self excluded

    explicit MaskGraph(const Graph& g, const char* field) : n(g.order()) {
        if (n > kMaskLimit)
            throw BudgetError("exact solver limited to n <= 64", field);
        all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        adj.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
        non_adj.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            non_adj[v] = all & ~adj[v] & ~(std::uint64_t{1} << v);
    }
};

struct NodeCounter {
    std::uint64_t nodes = 0;
    std::uint64_t limit;
    const char* field;

    void tick() {
        if (++nodes > limit) throw BudgetError("node budget exhausted", field);
    }
};

// Include-first descent over ascending vertex indices: the first set of the
// final maximum size found this way is the lexicographically smallest one,
// so strict improvement gives the canonical tie-break for free.
void best_set_rec(const MaskGraph& mg, std::uint64_t candidates, std::uint64_t current,
                  int size, std::uint64_t& best_mask, int& best_size, NodeCounter& nodes) {
    nodes.tick();
    if (size + std::popcount(candidates) <= best_size) return;
    if (candidates == 0) {
        best_size = size;
        best_mask = current;
        return;
    }
    int v = std::countr_zero(candidates);
    std::uint64_t bit = std::uint64_t{1} << v;
    best_set_rec(mg, candidates & ~bit & ~mg.adj[v], current | bit, size + 1,
                 best_mask, best_size, nodes);
    best_set_rec(mg, candidates & ~bit, current, size, best_mask, best_size, nodes);
}

void enumerate_rec(const MaskGraph& mg, std::uint64_t candidates, std::uint64_t current,
                   int size, int target, std::vector<std::uint64_t>& out,
                   std::uint64_t max_sets, NodeCounter& nodes) {
    nodes.tick();
    if (size == target) {
        if (out.size() >= max_sets)
            throw BudgetError("enumeration budget exceeded", nodes.field);
        out.push_back(current);
        return;
    }
    if (size + std::popcount(candidates) < target) return;
    int v = std::countr_zero(candidates);
    std::uint64_t bit = std::uint64_t{1} << v;
    enumerate_rec(mg, candidates & ~bit & ~mg.adj[v], current | bit, size + 1, target,
                  out, max_sets, nodes);
    enumerate_rec(mg, candidates & ~bit, current, size, target, out, max_sets, nodes);
}

// Pivoting enumeration of maximal independent sets (Bron-Kerbosch on the
// non-adjacency rows). Visitor returns false to stop.
bool maximal_rec(const MaskGraph& mg, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                 const std::function<bool(std::uint64_t)>& visit, NodeCounter& nodes) {
    nodes.tick();
    if (p == 0 && x == 0) return visit(r);
    // pivot: vertex of p|x covering the most of p
    std::uint64_t px = p | x;
    int pivot = -1;
    int best_cover = -1;
    for (std::uint64_t scan = px; scan != 0; scan &= scan - 1) {
        int u = std::countr_zero(scan);
        int cover = std::popcount(p & mg.non_adj[u]);
        if (cover > best_cover) {
            best_cover = cover;
            pivot = u;
        }
    }
    std::uint64_t ext = p & ~mg.non_adj[pivot];
    for (std::uint64_t scan = ext; scan != 0; scan &= scan - 1) {
        int v = std::countr_zero(scan);
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!maximal_rec(mg, r | bit, p & mg.non_adj[v], x & mg.non_adj[v], visit, nodes))
            return false;
        p &= ~bit;
        x |= bit;
    }
    return true;
}

}  // namespace

VertexSet maximum_independent_set(const Graph& g, const Budget& budget) {
    MaskGraph mg(g, "alpha");
    NodeCounter nodes{0, budget.max_nodes, "alpha"};
    std::uint64_t best_mask = 0;
    int best_size = -1;
    best_set_rec(mg, mg.all, 0, 0, best_mask, best_size, nodes);
    return VertexSet::from_mask(best_mask);
}

int independence_number(const Graph& g, const Budget& budget) {
    return static_cast<int>(maximum_independent_set(g, budget).size());
}

std::vector<VertexSet> all_maximum_independent_sets(const Graph& g, const Budget& budget) {
    MaskGraph mg(g, "max_ind_set_count");
    NodeCounter nodes{0, budget.max_nodes, "max_ind_set_count"};
    std::uint64_t best_mask = 0;
    int best_size = -1;
    best_set_rec(mg, mg.all, 0, 0, best_mask, best_size, nodes);
    std::vector<std::uint64_t> masks;
    enumerate_rec(mg, mg.all, 0, 0, best_size, masks, budget.max_sets, nodes);
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(VertexSet::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet core(const Graph& g, const Budget& budget) {
    MaskGraph mg(g, "core");
    NodeCounter nodes{0, budget.max_nodes, "core"};
    std::uint64_t best_mask = 0;
    int best_size = -1;
    best_set_rec(mg, mg.all, 0, 0, best_mask, best_size, nodes);
    std::vector<std::uint64_t> masks;
    enumerate_rec(mg, mg.all, 0, 0, best_size, masks, budget.max_sets, nodes);
    std::uint64_t inter = mg.all;
    for (std::uint64_t m : masks) inter &= m;
    return VertexSet::from_mask(inter);
}

void for_each_maximal_independent_set(const Graph& g, const Budget& budget,
                                      const std::function<bool(const VertexSet&)>& visit) {
    MaskGraph mg(g, "maximal_independent_sets");
    if (mg.n == 0) {
        visit(VertexSet{});
        return;
    }
    NodeCounter nodes{0, budget.max_nodes, "maximal_independent_sets"};
    std::uint64_t emitted = 0;
    maximal_rec(mg, 0, mg.all, 0,
                [&](std::uint64_t mask) {
                    if (++emitted > budget.max_sets)
                        throw BudgetError("enumeration budget exceeded",
                                          "maximal_independent_sets");
                    return visit(VertexSet::from_mask(mask));
                },
                nodes);
}

std::vector<VertexSet> all_maximal_independent_sets(const Graph& g, const Budget& budget) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, budget, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_well_covered(const Graph& g, const Budget& budget) {
    int alpha = independence_number(g, budget);
    bool ok = true;
    for_each_maximal_independent_set(g, budget, [&](const VertexSet& s) {
        if (static_cast<int>(s.size()) != alpha) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

int independent_domination_number(const Graph& g, const Budget& budget) {
    int best = g.order();
    for_each_maximal_independent_set(g, budget, [&](const VertexSet& s) {
        best = std::min(best, static_cast<int>(s.size()));
        return true;
    });
    return best;
}

}  // namespace imlab
