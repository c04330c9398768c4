#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imlab/graph.hpp"
#include "imlab/invariants.hpp"
#include "imlab/rational.hpp"

namespace imlab {

// mu(G) + |X| - mu(G[N[X]]) for X an intersection of maximum independent
// sets (verified against the enumeration; ContractError otherwise). The
// |X| - mu(...) term may be negative.
int theorem1_bound(const Graph& g, const VertexSet& x, const Budget& budget = {});

// theorem1_bound with X = core(g); for an empty core this is mu(g).
int core_bound(const Graph& g, const Budget& budget = {});

// mu + min over unordered pairs {A,B} of maximum independent sets of
// |A cap B| - mu(G[N[A cap B]]). Empty when the maximum independent set
// is unique (not applicable, distinct from an error).
std::optional<int> best_pair_bound(const Graph& g, const Budget& budget = {});

struct DegreeBoundCheck {
    long long lhs = 0;  // delta * alpha
    long long rhs = 0;  // Delta * mu
    long long slack = 0;
};

DegreeBoundCheck theorem2_check(const Graph& g, const Budget& budget = {});

// Delta * mu / delta as an exact rational; empty when delta == 0.
std::optional<Rational> ratio_bound(const Graph& g, const Budget& budget = {});

struct Chain1 {
    int n_minus_2mu = 0;
    int n_minus_2mu_star = 0;
    int alpha = 0;
    int n_minus_mu = 0;
};

Chain1 chain1_values(const Graph& g, const Budget& budget = {});

struct RegularChain {
    int alpha = 0;
    int mu = 0;
    Rational half_order;          // n/2
    int annihilation = 0;
    Rational size_degree_bound;   // n - m/Delta
    bool monotone = false;        // whether the five values are non-decreasing
};

// Empty unless g is r-regular with r > 0. The values are exact; for odd n
// the link n/2 <= a fails under the prefix-sum definition of a, which the
// monotone flag records instead of asserting.
std::optional<RegularChain> regular_chain(const Graph& g, const Budget& budget = {});

struct Eq3Check {
    int n_minus_2mu_star = 0;
    int mu = 0;
    bool applicable = false;  // regular r>0, or isolate-free well-covered, or empty core
    bool holds = false;
};

Eq3Check eq3_check(const Graph& g, const Budget& budget = {});

struct BoundValue {
    int bound = 0;
    int slack = 0;  // bound - alpha, >= 0 for every proven inequality
    bool equality() const { return slack == 0; }
};

struct BoundReport {
    std::string id;
    InvariantRecord record;
    BoundValue thm1_core;
    std::optional<BoundValue> thm1_best_pair;  // empty for a unique maximum independent set
    DegreeBoundCheck thm2;
    Chain1 chain1;
    std::optional<Rational> ratio2;
    Eq3Check eq3;
    bool problem1_equality = false;  // cubic and alpha == mu
    bool problem2_equality = false;  // delta*alpha == Delta*mu
    // prior-work comparison columns, computed but never asserted
    int boros_column = 0;   // mu + |core| - 1
    int levit_column = 0;   // mu + |core| - |N(core)|
    std::vector<std::string> defects;  // nonempty only on implementation bugs

    static std::string csv_header();
    std::string csv_row() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Runs every bound check; negative slack on a proven inequality is recorded
// in defects (the caller escalates).
BoundReport evaluate_all(const std::string& id, const Graph& g, const Budget& budget = {});

// How Theorem-1 equality is achieved across the realized intersections:
// single maximum independent sets are tight by construction; pairs and the
// full core are computed exactly.
struct EqualityProfile {
    bool pair_equality = false;      // some pairwise intersection is tight
    bool core_equality = false;
    std::uint64_t pair_count = 0;    // pairs inspected
    std::uint64_t tight_pairs = 0;
};

EqualityProfile theorem1_equality_profile(const Graph& g, const Budget& budget = {});

// Expected values for the sharpness family G(p,q,r): items A-C closed
// forms (floor reading when q - r is odd) and both readings of item D.
struct GpqrExpectation {
    int alpha = 0;               // p + r
    int mu = 0;                  // p + q  or  p + floor((q+r)/2)
    int core_size = 0;           // r
    Rational item_d_paper;       // r - q  or  (r-q)/2 as written
    int item_d_exact = 0;        // value the graph actually realizes
    bool parity_exact = true;    // false when q - r is odd and r < q
};

GpqrExpectation gpqr_expectation(int p, int q, int r);

}  // namespace imlab
