#include <doctest.h>

#include "imlab/generators.hpp"
#include "imlab/harness.hpp"
#include "imlab/invariants.hpp"
#include "oracles.hpp"

using namespace imlab;

TEST_CASE("matching number on the observation families") {
    CHECK(matching_number(gen::complete(7)) == 3);
    CHECK(matching_number(gen::empty_graph(5)) == 0);
    CHECK(matching_number(gen::petersen()) == 5);
    CHECK(oracle::brute_mu(gen::petersen()) == 5);
    Matching m = maximum_matching(gen::petersen());
    require_valid_matching(gen::petersen(), m, "test");
}

TEST_CASE("brute matching oracle") {
    CHECK(brute_matching_number(gen::cycle(5)) == 2);
    CHECK(brute_matching_number(gen::complete(4)) == 2);
    CHECK(brute_matching_number(gen::empty_graph(3)) == 0);
    CHECK_THROWS_AS(brute_matching_number(gen::complete(8)), BudgetError);  // m = 28
}

TEST_CASE("independence number and lexicographic tie-break") {
    CHECK(independence_number(gen::empty_graph(5)) == 5);
    CHECK(independence_number(gen::complete(7)) == 1);
    CHECK(independence_number(gen::cycle(5)) == 2);
    CHECK(maximum_independent_set(gen::cycle(5)) == VertexSet{0, 2});
    CHECK(maximum_independent_set(gen::complete(7)) == VertexSet{0});
    CHECK(maximum_independent_set(gen::petersen()).size() == 4);
}

TEST_CASE("all maximum independent sets are enumerated in order") {
    auto sets = all_maximum_independent_sets(gen::cycle(5));
    std::vector<VertexSet> expected = {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    CHECK(sets == expected);

    auto p3 = all_maximum_independent_sets(gen::path(3));
    CHECK(p3 == std::vector<VertexSet>{{0, 2}});

    auto k3 = all_maximum_independent_sets(gen::complete(3));
    CHECK(k3 == std::vector<VertexSet>{{0}, {1}, {2}});
}

TEST_CASE("core") {
    CHECK(core(gen::path(3)) == VertexSet{0, 2});
    CHECK(core(gen::cycle(5)) == VertexSet{});
    // independent block of G(2,1,3) sits at indices 5..7
    CHECK(core(gen::family_gpqr(2, 1, 3)) == VertexSet{5, 6, 7});
}

TEST_CASE("maximal independent sets") {
    auto p5 = all_maximal_independent_sets(gen::path(5));
    CHECK(std::find(p5.begin(), p5.end(), VertexSet{1, 3}) != p5.end());
    CHECK(std::find(p5.begin(), p5.end(), VertexSet{0, 2, 4}) != p5.end());
    CHECK(p5 == oracle::brute_maximal_independent_sets(gen::path(5)));

    auto k4 = all_maximal_independent_sets(gen::complete(4));
    CHECK(k4 == std::vector<VertexSet>{{0}, {1}, {2}, {3}});

    auto c4 = all_maximal_independent_sets(gen::cycle(4));
    CHECK(c4 == std::vector<VertexSet>{{0, 2}, {1, 3}});
}

TEST_CASE("well-covered recognition") {
    CHECK(is_well_covered(gen::cycle(5)));
    CHECK_FALSE(is_well_covered(gen::path(5)));
    CHECK(is_well_covered(gen::cycle(4)));
}

TEST_CASE("independent domination number") {
    CHECK(independent_domination_number(gen::complete_bipartite(1, 3)) == 1);
    CHECK(independent_domination_number(gen::cycle(5)) == 2);
    CHECK(independent_domination_number(gen::petersen()) == 3);
    CHECK(oracle::brute_idom(gen::petersen()) == 3);
}

TEST_CASE("minimum maximal matching") {
    Matching p4 = minimum_maximal_matching(gen::path(4));
    CHECK(p4.size() == 1);
    CHECK(p4.edges()[0] == EdgePair{1, 2});  // only the middle edge is maximal alone
    CHECK(minimum_maximal_matching(gen::cycle(5)).size() == 2);
    CHECK(minimum_maximal_matching(gen::empty_graph(4)).size() == 0);
    CHECK(oracle::brute_mu_star(gen::path(4)) == 1);
    CHECK(oracle::brute_mu_star(gen::cycle(5)) == 2);
}

TEST_CASE("annihilation number") {
    CHECK(annihilation_number(gen::complete_bipartite(1, 3)) == 3);
    CHECK(annihilation_number(gen::cycle(6)) == 3);
    CHECK(annihilation_number(gen::empty_graph(7)) == 7);
    CHECK(annihilation_number(gen::complete(3)) == 1);
}

TEST_CASE("edge chromatic class") {
    CHECK(edge_chromatic_class(gen::complete(4)) == EdgeClass::Class1);
    CHECK(edge_chromatic_class(gen::cycle(5)) == EdgeClass::Class2);
    CHECK(edge_chromatic_class(gen::petersen()) == EdgeClass::Class2);
    CHECK(edge_chromatic_class(gen::cycle(6)) == EdgeClass::Class1);
    CHECK(edge_chromatic_class(gen::empty_graph(3)) == EdgeClass::Class1);
    CHECK(edge_chromatic_class(gen::complete(5)) == EdgeClass::Class2);
    CHECK(edge_chromatic_class(gen::complete(6)) == EdgeClass::Class1);
}

TEST_CASE("edge class agrees with the base-k coloring oracle on tiny graphs") {
    ExhaustiveLabeledSource source(1, 4);
    while (auto entry = source.next()) {
        const Graph& g = entry->graph;
        bool class1 = edge_chromatic_class(g) == EdgeClass::Class1;
        CHECK(class1 == oracle::brute_k_edge_colorable(g, g.max_degree()));
    }
}

TEST_CASE("konig-egervary flag") {
    CHECK(is_konig_egervary(gen::path(4)));
    CHECK_FALSE(is_konig_egervary(gen::complete(3)));
    CHECK(is_konig_egervary(gen::cycle(4)));
}

TEST_CASE("compute_record on the worked examples") {
    InvariantRecord e5 = compute_record(gen::empty_graph(5));
    CHECK(e5.alpha == 5);
    CHECK(e5.mu == 0);
    CHECK(e5.mu_star == 0);
    CHECK(e5.idom == 5);
    CHECK(e5.annihilation == 5);
    CHECK(e5.core_size == 5);

    InvariantRecord k7 = compute_record(gen::complete(7));
    CHECK(k7.alpha == 1);
    CHECK(k7.mu == 3);
    CHECK(k7.core_size == 0);
    CHECK(k7.max_ind_set_count == 7);

    InvariantRecord c5 = compute_record(gen::cycle(5));
    CHECK(c5.alpha == 2);
    CHECK(c5.mu == 2);
    CHECK(c5.mu_star == 2);
    CHECK(c5.idom == 2);
    CHECK(c5.core_size == 0);
    CHECK(c5.well_covered);
    CHECK(c5.edge_class == EdgeClass::Class2);
}

TEST_CASE("record serialization has the documented field order") {
    InvariantRecord rec = compute_record(gen::cycle(5));
    CHECK(InvariantRecord::csv_header() ==
          "n,m,alpha,mu,mu_star,idom,annihilation,delta,big_delta,core_size,"
          "edge_class,well_covered,konig_egervary,max_ind_set_count");
    CHECK(rec.csv_row() == "5,5,2,2,2,2,2,2,2,0,Class2,1,0,5");
    CHECK(rec.to_json().find("\"alpha\":2") != std::string::npos);
}

TEST_CASE("budget errors carry the failing field") {
    Budget tiny;
    tiny.max_nodes = 1;
    try {
        compute_record(gen::petersen(), tiny);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK_FALSE(e.field().empty());
    }
}

TEST_CASE("solvers agree with oracles on every labeled graph up to 5 vertices") {
    ExhaustiveLabeledSource source(1, 5);
    while (auto entry = source.next()) {
        const Graph& g = entry->graph;
        CAPTURE(entry->id);
        CHECK(matching_number(g) == oracle::brute_mu(g));
        CHECK(matching_number(g) == brute_matching_number(g));
        CHECK(independence_number(g) == oracle::brute_alpha(g));
        CHECK(all_maximum_independent_sets(g) == oracle::brute_maximum_independent_sets(g));
        CHECK(core(g) == oracle::brute_core(g));
        CHECK(all_maximal_independent_sets(g) == oracle::brute_maximal_independent_sets(g));
        CHECK(independent_domination_number(g) == oracle::brute_idom(g));
        CHECK(is_well_covered(g) == oracle::brute_well_covered(g));
        CHECK(minimum_maximal_matching_number(g) == oracle::brute_mu_star(g));
        // tie-break contract: the witness is the lex-smallest maximum set
        CHECK(maximum_independent_set(g) == all_maximum_independent_sets(g).front());
        InvariantRecord rec = compute_record(g);  // internal gates must pass
        CHECK(rec.mu_star <= rec.mu);
    }
}

TEST_CASE("solvers agree with oracles on seeded random graphs up to 12 vertices") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gen::random_gnp(6 + static_cast<int>(seed % 7), 1, 2, 1000 + seed);
        CAPTURE(seed);
        CHECK(independence_number(g) == oracle::brute_alpha(g));
        CHECK(core(g) == oracle::brute_core(g));
        CHECK(independent_domination_number(g) == oracle::brute_idom(g));
        if (g.size() <= 22) CHECK(matching_number(g) == brute_matching_number(g));
        if (g.size() <= 15) {
            CHECK(matching_number(g) == oracle::brute_mu(g));
            CHECK(minimum_maximal_matching_number(g) == oracle::brute_mu_star(g));
        }
    }
}
