// Acceptance suite: runs the full verification battery and prints one
// PASS/FAIL line per criterion. Exit code 0 iff every selected criterion
// passes. Run a single criterion with --criterion N.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "imlab/bounds.hpp"
#include "imlab/generators.hpp"
#include "imlab/graph_io.hpp"
#include "imlab/harness.hpp"
#include "imlab/invariants.hpp"
#include "imlab/lemmas.hpp"
#include "oracles.hpp"

using namespace imlab;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes << "    FAILED: " << what << '\n';
        }
    }

    void note(const std::string& what) { notes << "    note: " << what << '\n'; }
};

// ---- criterion 1: observation families -----------------------------------

void criterion_observations(Outcome& out) {
    for (int n = 1; n <= 10; ++n) {
        InvariantRecord empty = compute_record(gen::empty_graph(n));
        out.require(empty.alpha == n, "E_n alpha == n for n=" + std::to_string(n));
        out.require(empty.mu == 0, "E_n mu == 0 for n=" + std::to_string(n));
        InvariantRecord complete = compute_record(gen::complete(n));
        out.require(complete.alpha == 1, "K_n alpha == 1 for n=" + std::to_string(n));
        out.require(complete.mu == n / 2, "K_n mu == floor(n/2) for n=" + std::to_string(n));
    }
}

// ---- criterion 2: oracle equivalence on the 6-vertex corpus ---------------

void criterion_oracles(Outcome& out) {
    ExhaustiveLabeledSource source(6, 6);
    std::uint64_t count = 0;
    std::uint64_t mu_mismatch = 0;
    std::uint64_t alpha_mismatch = 0;
    while (auto entry = source.next()) {
        ++count;
        const Graph& g = entry->graph;
        if (matching_number(g) != brute_matching_number(g)) ++mu_mismatch;
        if (independence_number(g) != oracle::brute_alpha(g)) ++alpha_mismatch;
    }
    out.require(count == 32768, "corpus holds all 2^15 labeled graphs");
    out.require(mu_mismatch == 0, "matching solver == exhaustive oracle everywhere");
    out.require(alpha_mismatch == 0, "independence solver == brute force everywhere");
}

// ---- criteria 3/4: theorem suites over the shared corpora -----------------

template <typename Visit>
void for_each_corpus_graph(Visit&& visit) {
    ExhaustiveLabeledSource exhaustive(1, 6);
    while (auto entry = exhaustive.next()) visit(entry->id, entry->graph);
    RandomGnpSource random(4, 12, 1000, 20260810);
    while (auto entry = random.next()) visit(entry->id, entry->graph);
}

void criterion_theorem1(Outcome& out) {
    std::uint64_t defects = 0;
    std::uint64_t graphs = 0;
    std::string first;
    for_each_corpus_graph([&](const std::string& id, const Graph& g) {
        ++graphs;
        auto maximum_sets = all_maximum_independent_sets(g);
        int alpha = static_cast<int>(maximum_sets.front().size());
        int mu = matching_number(g);
        VertexSet core_set = maximum_sets.front();
        for (const auto& s : maximum_sets) core_set = set_intersection(core_set, s);
        auto term = [&](const VertexSet& x) {
            return static_cast<int>(x.size()) -
                   matching_number(induced_subgraph(g, closed_neighborhood(g, x)).graph);
        };
        if (mu + term(core_set) < alpha) {
            ++defects;
            if (first.empty()) first = id + " (core)";
        }
        for (std::size_t i = 0; i < maximum_sets.size(); ++i)
            for (std::size_t j = i + 1; j < maximum_sets.size(); ++j)
                if (mu + term(set_intersection(maximum_sets[i], maximum_sets[j])) < alpha) {
                    ++defects;
                    if (first.empty()) first = id + " (pair)";
                }
    });
    out.require(graphs == 33867 + 1000, "corpus size is exhaustive n<=6 plus 1000 random");
    out.require(defects == 0, "theorem 1 slack >= 0 for core and all pairs; first bad: " + first);
}

void criterion_theorem2(Outcome& out) {
    std::uint64_t defects = 0;
    for_each_corpus_graph([&](const std::string&, const Graph& g) {
        long long slack = static_cast<long long>(g.max_degree()) * matching_number(g) -
                          static_cast<long long>(g.min_degree()) * independence_number(g);
        if (slack < 0) ++defects;
    });
    out.require(defects == 0, "Delta*mu - delta*alpha >= 0 everywhere");
    for (int delta = 1; delta <= 4; ++delta)
        for (int other = delta; other <= 6; ++other) {
            Graph g = gen::complete_bipartite(delta, other);
            long long lhs = static_cast<long long>(g.min_degree()) * independence_number(g);
            long long rhs = static_cast<long long>(g.max_degree()) * matching_number(g);
            out.require(lhs == rhs, "K_{" + std::to_string(delta) + "," + std::to_string(other) +
                                        "} achieves slack exactly 0");
        }
}

// ---- criterion 5: sharpness family grid -----------------------------------

void criterion_gpqr_grid(Outcome& out) {
    int parity_findings = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 4; ++q)
            for (int r = 0; r <= 5; ++r) {
                if (p + r < 2) continue;
                Graph g = gen::family_gpqr(p, q, r);
                std::string tag = "G(" + std::to_string(p) + "," + std::to_string(q) + "," +
                                  std::to_string(r) + ")";
                GpqrExpectation expect = gpqr_expectation(p, q, r);

                int alpha = oracle::brute_alpha(g);
                out.require(alpha == expect.alpha, tag + " brute alpha == p + r");
                int mu = oracle::tutte_berge_mu(g);
                out.require(mu == expect.mu, tag + " brute mu matches item C (floor reading)");
                out.require(matching_number(g) == mu, tag + " blossom agrees with the certificate");

                auto oracle_sets = oracle::brute_maximum_independent_sets(g);
                VertexSet core_set = oracle_sets.front();
                for (const auto& s : oracle_sets) core_set = set_intersection(core_set, s);
                std::vector<Vertex> expected_core;
                for (int k = 0; k < r; ++k) expected_core.push_back(2 * p + q + k);
                out.require(core_set == VertexSet(expected_core), tag + " core == independent block");

                // every enumerated intersection: singles, pairs, and the core
                std::vector<VertexSet> intersections = oracle_sets;
                for (std::size_t i = 0; i < oracle_sets.size(); ++i)
                    for (std::size_t j = i + 1; j < oracle_sets.size(); ++j)
                        intersections.push_back(
                            set_intersection(oracle_sets[i], oracle_sets[j]));
                intersections.push_back(core_set);
                bool exact_parity = r >= q || (q - r) % 2 == 0;
                for (const auto& x : intersections) {
                    int bound = mu + static_cast<int>(x.size()) -
                                matching_number(
                                    induced_subgraph(g, closed_neighborhood(g, x)).graph);
                    out.require(bound >= alpha, tag + " theorem 1 holds");
                    // the empty intersection (only realized when r = 0 < q)
                    // forces a zero term while the closed form is negative;
                    // equality is impossible there, so it is a recorded
                    // finding like the parity-odd cases
                    bool outside_closed_form = x.empty() && r < q;
                    if (exact_parity && !outside_closed_form) {
                        out.require(bound == alpha, tag + " theorem-1 equality at |X|=" +
                                                        std::to_string(x.size()));
                    } else if (bound != alpha) {
                        ++parity_findings;
                        out.note(tag + (outside_closed_form ? " empty-intersection slack "
                                                            : " parity-odd slack ") +
                                 std::to_string(bound - alpha) + " at |X|=" +
                                 std::to_string(x.size()));
                    }
                }
                if (!exact_parity) {
                    ++parity_findings;
                    out.note(tag + " paper item D reads " + expect.item_d_paper.to_string() +
                             ", graph realizes " + std::to_string(expect.item_d_exact));
                }
            }
    out.note("parity-odd findings recorded: " + std::to_string(parity_findings));
}

// ---- criterion 6: lemma constructions -------------------------------------

// Extends an independent set to a maximal one by ascending vertex scan;
// usually not maximum, which is exactly what the general statements allow.
VertexSet greedy_independent_extension(const Graph& g, const VertexSet& x) {
    VertexSet current = x;
    for (int v = 0; v < g.order(); ++v) {
        if (current.contains(v)) continue;
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (current.contains(w)) {
                blocked = true;
                break;
            }
        if (!blocked) current = set_union(current, VertexSet{v});
    }
    return current;
}

void criterion_lemmas(Outcome& out) {
    std::uint64_t instances = 0;
    std::uint64_t seed = 0;
    while (instances < 500 && seed < 5000) {
        ++seed;
        Graph g = gen::random_gnp(4 + static_cast<int>(seed % 7), 1, 2, 555000 + seed);
        auto maximum_sets = all_maximum_independent_sets(g);
        if (maximum_sets.size() < 2) continue;
        ++instances;
        const VertexSet& a = maximum_sets[seed % maximum_sets.size()];
        const VertexSet& x = maximum_sets[(seed / 2 + 1) % maximum_sets.size()];

        Matching hall = hall_saturating_matching(g, a, x);
        require_valid_matching(g, hall, "acceptance");
        out.require(hall.saturates_all(set_difference(a, x)), "lemma-3 saturation is total");
        out.require(hall.size() == set_difference(a, x).size(),
                    "lemma-3 matching size equals |A - (A cap X)|");

        // alternate between a maximum base and a merely independent one
        VertexSet core_set = maximum_sets.front();
        for (const auto& s : maximum_sets) core_set = set_intersection(core_set, s);
        VertexSet base = seed % 2 == 0 ? a : greedy_independent_extension(g, core_set);
        IntersectionChain chain{base, maximum_sets};
        TelescopeResult t = telescoping_matching(g, chain);
        require_valid_matching(g, t.combined, "acceptance");
        out.require(static_cast<int>(t.combined.size()) >= t.size_lower_bound,
                    "lemma-4 size bound |M| >= |A| - |X| + mu(G[N[X]])");
        auto term = [&](const VertexSet& s) {
            return static_cast<int>(s.size()) -
                   matching_number(induced_subgraph(g, closed_neighborhood(g, s)).graph);
        };
        out.require(term(base) <= term(t.intersection),
                    "lemma-4 monotonicity |A|-mu(G[N[A]]) <= |X|-mu(G[N[X]])");
    }
    out.require(instances == 500, "500 seeded instances with n <= 10 were exercised");
}

// ---- criterion 7: regular saturating witness -------------------------------

void criterion_regular_witness(Outcome& out) {
    std::uint64_t instances = 0;
    struct Shape {
        int n;
        int r;
    };
    std::vector<Shape> shapes;
    for (std::uint64_t i = 0; instances + shapes.size() < 200 && i < 400; ++i) {
        int r = 2 + static_cast<int>(i % 3);
        int n = 6 + static_cast<int>((i * 2) % 11);  // 6..16
        if (n <= r || (n * r) % 2 != 0) continue;
        shapes.push_back({n, r});
    }
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        Graph g = gen::random_regular(shapes[i].n, shapes[i].r, 909000 + i);
        VertexSet x = maximum_independent_set(g);
        Matching witness = regular_saturating_matching(g, x);
        require_valid_matching(g, witness, "acceptance");
        out.require(witness.saturates_all(x), "witness saturates the maximum independent set");
        out.require(witness.size() >= x.size(), "witness has at least alpha edges");
        out.require(static_cast<int>(x.size()) <= matching_number(g), "alpha <= mu");
        ++instances;
    }
    out.require(instances == 200, "200 random regular instances exercised, got " +
                                      std::to_string(instances));
    for (int n = 3; n <= 20; ++n) {
        Graph g = gen::cycle(n);
        VertexSet x = maximum_independent_set(g);
        Matching witness = regular_saturating_matching(g, x);
        out.require(witness.saturates_all(x), "C_n witness saturates for n=" + std::to_string(n));
        out.require(static_cast<int>(x.size()) <= matching_number(g),
                    "alpha <= mu on C_n for n=" + std::to_string(n));
    }
}

// ---- criteria 8/9: corpus-wide class and covering properties ---------------

void criterion_fournier(Outcome& out) {
    ExhaustiveLabeledSource source(1, 6);
    std::uint64_t class2 = 0;
    std::uint64_t exceptions = 0;
    while (auto entry = source.next()) {
        if (edge_chromatic_class(entry->graph) == EdgeClass::Class2) {
            ++class2;
            if (!has_cycle(max_degree_subgraph(entry->graph))) ++exceptions;
        }
    }
    out.require(class2 > 0, "corpus contains Class2 graphs");
    out.require(exceptions == 0, "every Class2 graph has a cycle among its max-degree vertices");
    out.note("Class2 graphs seen: " + std::to_string(class2));
}

void criterion_covering(Outcome& out) {
    ExhaustiveLabeledSource source(1, 6);
    std::uint64_t violations = 0;
    std::uint64_t eq3_violations = 0;
    while (auto entry = source.next()) {
        const Graph& g = entry->graph;
        int alpha = independence_number(g);
        int mu = matching_number(g);
        bool ifwc = g.min_degree() >= 1 && is_well_covered(g);
        bool empty_core = core(g).empty();
        if ((ifwc || empty_core) && alpha > mu) ++violations;
        bool regular_positive = g.is_regular() && g.max_degree() > 0;
        if (ifwc || empty_core || regular_positive) {
            if (g.order() - 2 * minimum_maximal_matching_number(g) > mu) ++eq3_violations;
        }
    }
    out.require(violations == 0, "alpha <= mu for isolate-free well-covered and empty-core graphs");
    out.require(eq3_violations == 0, "n - 2mu* <= mu under the three qualifying conditions");
}

// ---- criterion 10: conjecture scan over connected cubic graphs -------------

void criterion_conjecture1(Outcome& out) {
    std::vector<GraphEntry> corpus;
    ExhaustiveLabeledSource small(4, 6);
    while (auto entry = small.next()) {
        if (entry->graph.is_regular() && entry->graph.max_degree() == 3 &&
            is_connected(entry->graph))
            corpus.push_back(*entry);
    }
    std::uint64_t labeled_small = corpus.size();
    std::set<std::string> seen;
    for (int n : {8, 10, 12}) {
        RandomRegularSource source(n, 3, 120, 77000 + n);
        while (auto entry = source.next()) {
            if (!is_connected(entry->graph)) continue;
            if (seen.insert(entry->id).second) corpus.push_back(*entry);
        }
    }
    out.note("cubic corpus: " + std::to_string(labeled_small) +
             " labeled exhaustive (n<=6) + " + std::to_string(corpus.size() - labeled_small) +
             " distinct sampled (n in {8,10,12})");
    VectorSource source(std::move(corpus));
    ScanOptions options;
    options.checks = {Check::Conjecture1};
    SearchReport report = scan(source, options);
    out.require(report.conjecture1_checked == report.scanned, "every cubic graph was checked");
    out.require(report.conjecture1_violations.empty(), "i <= mu* held everywhere");
    out.require(report.exit_code() == 0, "clean scan exits 0");
    if (!report.conjecture1_violations.empty()) {
        std::ofstream f("conjecture1_violations.g6");
        for (const auto& v : report.conjecture1_violations) f << v.id << '\n';
        out.note("violations persisted to conjecture1_violations.g6");
    }
}

// ---- criterion 11: graph6 round-trip ---------------------------------------

void criterion_graph6(Outcome& out) {
    std::vector<std::string> corpus;
    Rng rng(424242);
    while (corpus.size() < 10000) {
        int n = 1 + static_cast<int>(rng.below(62));
        std::uint64_t density = 1 + rng.below(9);
        std::uint64_t seed = rng.next();
        corpus.push_back(oracle::reference_graph6(gen::random_gnp(n, density, 10, seed)));
    }
    std::uint64_t mismatches = 0;
    for (const auto& line : corpus) {
        Graph g = parse_graph6(line);
        if (encode_graph6(g) != line) ++mismatches;
    }
    out.require(mismatches == 0, "encode(parse(line)) is byte-exact on 10^4 lines");
}

// ---- criterion 12: determinism ---------------------------------------------

SearchReport full_scan(int workers) {
    std::vector<std::unique_ptr<GraphSource>> parts;
    parts.push_back(std::make_unique<ExhaustiveLabeledSource>(1, 6));
    parts.push_back(std::make_unique<RandomGnpSource>(4, 12, 300, 13579));
    parts.push_back(std::make_unique<RandomRegularSource>(10, 3, 50, 24680));
    struct Chain : GraphSource {
        std::vector<std::unique_ptr<GraphSource>> parts;
        std::size_t index = 0;
        std::optional<GraphEntry> next() override {
            while (index < parts.size()) {
                if (auto entry = parts[index]->next()) return entry;
                ++index;
            }
            return std::nullopt;
        }
    } source;
    source.parts = std::move(parts);
    ScanOptions options;
    options.checks = parse_checks("all");
    options.workers = workers;
    options.collect_rows = true;
    return scan(source, options);
}

void criterion_determinism(Outcome& out) {
    SearchReport first = full_scan(1);
    SearchReport second = full_scan(1);
    SearchReport parallel = full_scan(4);
    out.require(first.to_json() == second.to_json(), "two serial runs are byte-identical");
    out.require(first.to_csv() == second.to_csv(), "serial CSV tables are byte-identical");
    out.require(first.to_json() == parallel.to_json(), "workers=4 report is byte-identical");
    out.require(first.to_csv() == parallel.to_csv(), "workers=4 CSV table is byte-identical");
    out.require(first.defects.empty(), "full scan sees zero defects");
}

// ---- informational probe (recorded, never asserted) ------------------------

void probe_prism(Outcome& out) {
    Graph g = gen::prism_with_isolates();
    EqualityProfile profile = theorem1_equality_profile(g);
    out.note("prism-with-isolates probe: singletons are tight by construction (k=1 reading)");
    out.note("prism-with-isolates probe: tight pairs " + std::to_string(profile.tight_pairs) +
             "/" + std::to_string(profile.pair_count) +
             ", core tight: " + (profile.core_equality ? "yes" : "no"));
    Graph bare = gen::circular_ladder(3);
    EqualityProfile bare_profile = theorem1_equality_profile(bare);
    out.note("bare prism probe: tight pairs " + std::to_string(bare_profile.tight_pairs) + "/" +
             std::to_string(bare_profile.pair_count) +
             ", core tight: " + (bare_profile.core_equality ? "yes" : "no"));
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Outcome&)> run;
    long long time_limit_ms = 0;  // 0 = no stated budget
};

const std::vector<Criterion> kCriteria = {
    {1, "observation families E_n and K_n, n in 1..10", criterion_observations, 1000},
    {2, "oracle equivalence on all 32768 labeled 6-vertex graphs", criterion_oracles, 120000},
    {3, "theorem 1 suite (core + pairwise) on exhaustive and random corpora", criterion_theorem1},
    {4, "theorem 2 suite with bipartite sharpness grid", criterion_theorem2},
    {5, "sharpness family grid, items A-D", criterion_gpqr_grid, 120000},
    {6, "lemma 3/4 constructions on 500 seeded instances", criterion_lemmas},
    {7, "regular saturating witness on 200 random regular graphs and cycles", criterion_regular_witness},
    {8, "Fournier property on the exhaustive n<=6 corpus", criterion_fournier},
    {9, "covering corollaries and the mu* inequality", criterion_covering},
    {10, "conjecture scan over connected cubic graphs", criterion_conjecture1},
    {11, "graph6 round-trip on 10^4 corpus lines", criterion_graph6},
    {12, "scan determinism across runs and worker counts", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            selected = std::atoi(argv[++i]);
    }
    bool all_ok = true;
    for (const auto& criterion : kCriteria) {
        if (selected != 0 && criterion.id != selected) continue;
        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(outcome);
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.notes << "    exception: " << e.what() << '\n';
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (criterion.time_limit_ms > 0)
            outcome.require(elapsed < criterion.time_limit_ms,
                            "finished within " + std::to_string(criterion.time_limit_ms) + " ms");
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " [" << criterion.id << "] "
                  << criterion.title << " (" << elapsed << " ms)\n"
                  << outcome.notes.str();
        all_ok = all_ok && outcome.ok;
    }
    if (selected == 0) {
        Outcome probe;
        probe_prism(probe);
        std::cout << "INFO probe: bound-equality profile of the drawn prism graph\n"
                  << probe.notes.str();
    }
    return all_ok ? 0 : 1;
}
