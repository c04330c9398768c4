#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "imlab/graph.hpp"

namespace imlab {

// Node-count limits for the exact solvers. Exceeding a limit raises
// BudgetError; approximation is never silently substituted.
struct Budget {
    std::uint64_t max_nodes = 50'000'000;
    std::uint64_t max_sets = 2'000'000;  // cap on enumerated set counts
};

// Maximum matching via augmenting search with blossom contraction.
// Polynomial, no budget needed; deterministic.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

// Validation oracle: exhaustive branch over edge subsets, independent of the
// blossom code path. Refuses m > 24.
int brute_matching_number(const Graph& g);

// Exact branch-and-bound; ties broken toward the lexicographically smallest
// canonical VertexSet. Mask-based: requires n <= 64.
VertexSet maximum_independent_set(const Graph& g, const Budget& budget = {});
int independence_number(const Graph& g, const Budget& budget = {});

// Every independent set of size alpha, canonical, sorted lexicographically.
std::vector<VertexSet> all_maximum_independent_sets(const Graph& g, const Budget& budget = {});

// Intersection of all maximum independent sets.
VertexSet core(const Graph& g, const Budget& budget = {});

// Inclusion-maximal independent sets (pivoting enumeration), sorted.
std::vector<VertexSet> all_maximal_independent_sets(const Graph& g, const Budget& budget = {});

// Streaming visitor over maximal independent sets; return false to stop early.
void for_each_maximal_independent_set(const Graph& g, const Budget& budget,
                                      const std::function<bool(const VertexSet&)>& visit);

bool is_well_covered(const Graph& g, const Budget& budget = {});
int independent_domination_number(const Graph& g, const Budget& budget = {});

// Exact minimum maximal matching by branching on the first uncovered edge.
Matching minimum_maximal_matching(const Graph& g, const Budget& budget = {});
int minimum_maximal_matching_number(const Graph& g, const Budget& budget = {});

// Largest k such that the k smallest degrees sum to at most m(G).
int annihilation_number(const Graph& g);

enum class EdgeClass { Class1, Class2 };

const char* to_string(EdgeClass c);

// Exact: Class1 iff a proper max_degree(g)-edge-coloring exists
// (backtracking with color-symmetry breaking; Vizing bounds the answer).
EdgeClass edge_chromatic_class(const Graph& g, const Budget& budget = {});

// alpha + mu == n, equality on the right of the classic chain.
bool is_konig_egervary(const Graph& g, const Budget& budget = {});

struct InvariantRecord {
    int n = 0;
    int m = 0;
    int alpha = 0;
    int mu = 0;
    int mu_star = 0;
    int idom = 0;
    int annihilation = 0;
    int delta = 0;
    int big_delta = 0;
    int core_size = 0;
    EdgeClass edge_class = EdgeClass::Class1;
    bool well_covered = false;
    bool konig_egervary = false;
    std::uint64_t max_ind_set_count = 0;

    // Fixed column order shared by the CSV and JSON serializations:
    // n,m,alpha,mu,mu_star,idom,annihilation,delta,big_delta,core_size,
    // edge_class,well_covered,konig_egervary,max_ind_set_count
    static std::string csv_header();
    std::string csv_row() const;
    std::string to_json() const;
};

// Computes every field and asserts the internal consistency invariants
// (inequality chain, mu* <= mu, i <= alpha, alpha <= a, ...) before
// returning; a violation raises DefectError. Budget errors carry the name
// of the failing field.
InvariantRecord compute_record(const Graph& g, const Budget& budget = {});

}  // namespace imlab
