#include <doctest.h>

#include "imlab/generators.hpp"

using namespace imlab;

TEST_CASE("complete bipartite degrees") {
    Graph g = gen::complete_bipartite(2, 5);
    CHECK(g.order() == 7);
    CHECK(g.min_degree() == 2);
    CHECK(g.max_degree() == 5);
    CHECK_THROWS_AS(gen::complete_bipartite(0, 3), GraphError);
}

TEST_CASE("cycle and path") {
    Graph c5 = gen::cycle(5);
    CHECK(c5.size() == 5);
    CHECK(c5.is_regular());
    CHECK(c5.max_degree() == 2);
    CHECK(gen::path(1).size() == 0);
    CHECK(gen::path(4).size() == 3);
    CHECK_THROWS_AS(gen::cycle(2), GraphError);
}

TEST_CASE("petersen structure") {
    Graph p = gen::petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(p.is_regular());
    CHECK(p.max_degree() == 3);
}

TEST_CASE("prism with isolates ships as drawn") {
    Graph g = gen::prism_with_isolates();
    CHECK(g.order() == 9);
    CHECK(g.size() == 9);
    for (int v = 6; v < 9; ++v) CHECK(g.degree(v) == 0);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("random regular is simple, regular, and deterministic") {
    for (auto [n, r] : {std::pair{10, 3}, {12, 4}, {7, 2}}) {
        Graph g = gen::random_regular(n, r, 42);
        CHECK(g.order() == n);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == r);
        CHECK(gen::random_regular(n, r, 42) == g);
    }
    CHECK_THROWS_AS(gen::random_regular(5, 3, 1), GraphError);  // odd n*r
    CHECK_THROWS_AS(gen::random_regular(4, 4, 1), GraphError);  // r >= n
}

TEST_CASE("gpqr layout") {
    // clique 0..1, pendants 2..3, middle clique {4}, independent block 5..7
    Graph g = gen::family_gpqr(2, 1, 3);
    CHECK(g.order() == 2 * 2 + 1 + 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(2, 3));
    for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));  // everything meets K_q
    for (int v = 5; v < 8; ++v) {
        CHECK(g.adjacent(v, 4));
        CHECK(g.degree(v) == 1);
    }
    // pendants pick up the q join edges on top of their pendant edge
    CHECK(g.degree(2) == 1 + 1);
    CHECK_THROWS_AS(gen::family_gpqr(1, 5, 0), GraphError);  // p + r < 2
    CHECK(gen::family_gpqr(0, 2, 2).order() == 4);
}

TEST_CASE("gpqr pendant degree is 1 + q across a small grid") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 4; ++q)
            for (int r = 0; r <= 5; ++r) {
                if (p + r < 2) continue;
                Graph g = gen::family_gpqr(p, q, r);
                CHECK(g.order() == 2 * p + q + r);
                for (int i = 0; i < p; ++i) CHECK(g.degree(p + i) == 1 + q);
            }
}

TEST_CASE("random gnp is deterministic per seed") {
    Graph a = gen::random_gnp(10, 1, 2, 7);
    Graph b = gen::random_gnp(10, 1, 2, 7);
    CHECK(a == b);
    CHECK(gen::random_gnp(10, 0, 2, 7).size() == 0);
    CHECK(gen::random_gnp(6, 2, 2, 7).size() == 15);
}
