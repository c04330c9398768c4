#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "imlab/bounds.hpp"
#include "imlab/graph.hpp"
#include "imlab/invariants.hpp"

namespace imlab {

struct GraphEntry {
    std::string id;  // graph6 string
    Graph graph;
};

// Streaming source; pulls are serialized by the scanner, graphs never
// reside in memory all at once.
class GraphSource {
public:
    virtual ~GraphSource() = default;
    virtual std::optional<GraphEntry> next() = 0;
};

// One graph6 line per graph. Lines are numbered for error reporting;
// blank lines are skipped.
class Graph6StreamSource : public GraphSource {
public:
    explicit Graph6StreamSource(std::istream& in);
    std::optional<GraphEntry> next() override;

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

// Every labeled graph on exactly n vertices for n in [n_min, n_max].
// Refuses n_max > 7 (2^21 graphs on 7 vertices is the practical ceiling).
class ExhaustiveLabeledSource : public GraphSource {
public:
    ExhaustiveLabeledSource(int n_min, int n_max);
    std::optional<GraphEntry> next() override;

private:
    int n_;
    int n_max_;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_count_;
};

// Fixed list, e.g. generated families.
class VectorSource : public GraphSource {
public:
    explicit VectorSource(std::vector<GraphEntry> entries);
    std::optional<GraphEntry> next() override;

private:
    std::vector<GraphEntry> entries_;
    std::size_t index_ = 0;
};

// Seeded G(n,p) stream with n drawn uniformly from [n_min, n_max].
class RandomGnpSource : public GraphSource {
public:
    RandomGnpSource(int n_min, int n_max, std::uint64_t count, std::uint64_t seed);
    std::optional<GraphEntry> next() override;

private:
    int n_min_;
    int n_max_;
    std::uint64_t remaining_;
    std::uint64_t seed_;
    std::uint64_t drawn_ = 0;
};

// Seeded random r-regular stream.
class RandomRegularSource : public GraphSource {
public:
    RandomRegularSource(int n, int r, std::uint64_t count, std::uint64_t seed);
    std::optional<GraphEntry> next() override;

private:
    int n_;
    int r_;
    std::uint64_t remaining_;
    std::uint64_t seed_;
    std::uint64_t drawn_ = 0;
};

struct Filter {
    std::string name;
    std::function<bool(const Graph&)> pred;
};

// Named filters: connected, cubic, regular, isolate-free, nmax:K, nmin:K.
Filter make_filter(const std::string& name);

enum class Check {
    Record,      // invariant record incl. consistency gates
    Thm1,        // core + every pairwise intersection, slack >= 0
    Thm2,        // delta*alpha <= Delta*mu
    Chain1,
    Thm3,        // regular saturating-matching witness, alpha <= mu
    Fournier,    // Class2 => cycle in the max-degree subgraph
    Cor2,        // isolate-free well-covered => alpha <= mu
    Eq3,
    Conjecture1,  // regular: i <= mu*  (violations are findings)
    Question1,    // delta*i <= Delta*mu*  (violations are findings)
    Problem1,     // collect cubic alpha == mu witnesses
    Problem2,     // collect delta*alpha == Delta*mu witnesses
};

std::vector<Check> parse_checks(const std::string& list);  // "thm1,thm2" or "all"

struct Violation {
    std::string id;
    std::string check;
    std::string detail;
};

struct SearchReport {
    std::uint64_t scanned = 0;
    std::uint64_t filtered_out = 0;
    std::vector<std::string> filters;
    std::vector<std::string> checks;
    std::vector<Violation> defects;      // proven-theorem failures: bugs
    std::uint64_t conjecture1_checked = 0;
    std::vector<Violation> conjecture1_violations;
    std::uint64_t question1_checked = 0;
    std::vector<Violation> question1_violations;
    std::vector<std::string> problem1_witnesses;
    std::vector<std::string> problem2_witnesses;
    std::map<std::string, std::uint64_t> sharpness;  // zero-slack counts per bound
    std::vector<Violation> skipped;                  // budget-skips with reason
    std::vector<std::string> csv_rows;               // per-graph table (optional)

    void merge(SearchReport&& other);
    void canonicalize();  // sorts all lists so output is order-independent
    int exit_code() const;  // 0 clean, 1 findings, 2 defects, 3 skips
    std::string to_json() const;
    std::string to_csv() const;
    std::string summary() const;
};

struct ScanOptions {
    std::vector<Filter> filters;
    std::vector<Check> checks;
    Budget budget;
    int workers = 1;        // >1 parallelizes per-graph checks
    bool collect_rows = false;
};

SearchReport scan(GraphSource& source, const ScanOptions& options);

struct Conjecture1Result {
    int idom = 0;
    int mu_star = 0;
    bool holds = false;
};

// Empty unless g is regular with positive degree.
std::optional<Conjecture1Result> check_conjecture1(const Graph& g, const Budget& budget = {});

struct Question1Result {
    long long lhs = 0;  // delta * i
    long long rhs = 0;  // Delta * mu*
    bool holds = false;
};

Question1Result check_question1(const Graph& g, const Budget& budget = {});

enum class Problem { AlphaEqualsMuOnCubic, DegreeProductEquality };

// Deduplicated (by graph6 string) equality witnesses.
std::vector<std::string> collect_equality_witnesses(GraphSource& source, Problem which,
                                                    const Budget& budget = {});

}  // namespace imlab
