#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "girthbound/families.hpp"
#include "girthbound/triples.hpp"
#include "oracles.hpp"

using namespace girthbound;

TEST_CASE("k-good predicate on pinned cases") {
    CHECK(is_k_good(2, 2, 2, 2));
    CHECK(is_k_good(1, 1, 2, 2));
    CHECK(is_k_good(1, 2, 2, 2));
    CHECK(!is_k_good(1, 2, 2, 3));  // sum 5, odd, below 7
    CHECK(!is_k_good(1, 1, 3, 3));  // sum 5, odd, below 7
    CHECK(is_k_good(1, 1, 2, 3));   // sum even, triangular
    for (int k = 1; k <= 8; ++k)
        for (int p = 1; p <= k; ++p) CHECK(is_k_good(p, k, k, k));
    CHECK_THROWS_AS(is_k_good(0, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_k_good(1, 1, 3, 2), std::invalid_argument);
}

TEST_CASE("special triples {p,q,k}: good iff p+q >= k (k <= 20)") {
    for (int k = 1; k <= 20; ++k)
        for (int p = 1; p <= k; ++p)
            for (int q = 1; q <= k; ++q)
                REQUIRE(is_k_good(p, q, k, k) == (p + q >= k));
}

TEST_CASE("enumerations match the published lists") {
    CHECK(enumerate_k_good(1) == std::vector<GoodTriple>{{1, 1, 1}});
    CHECK(enumerate_k_good(2) == std::vector<GoodTriple>{{1, 1, 2}, {1, 2, 2}, {2, 2, 2}});
    CHECK(enumerate_k_good(3) ==
          std::vector<GoodTriple>{{1, 1, 2},
                                  {1, 2, 3},
                                  {1, 3, 3},
                                  {2, 2, 2},
                                  {2, 2, 3},
                                  {2, 3, 3},
                                  {3, 3, 3}});
}

TEST_CASE("enumeration counts pinned by the gadget oracle, monotone in k") {
    // golden values computed once by odd_girth(gadget(k,p,q,r)) >= 2k+1
    const std::vector<int> counts = {1, 3, 7, 13, 21, 32, 46, 63, 84, 109, 138, 172};
    int prev = 0;
    for (int k = 1; k <= 12; ++k) {
        int c = int(enumerate_k_good(k).size());
        REQUIRE(c == counts[k - 1]);
        REQUIRE(c >= prev);
        prev = c;
    }
}

TEST_CASE("realization on edges of C5") {
    auto levels = distance_levels(cycle(5));
    CHECK(realized_on_edge(levels, 0, 1, 1, 2));
    // vertex 3 sits at distance 2 from both endpoints of the edge (0,1)
    CHECK(realized_on_edge(levels, 0, 1, 2, 2));
    CHECK(!realized_on_edge(levels, 0, 2, 2, 2));
    CHECK(!realized_on_edge(levels, 0, 1, 2, 3));
}

TEST_CASE("every weight-2 pair of c8pp realizes {2,2,2}") {
    Graph g = c8pp();
    auto levels = distance_levels(g);
    auto d = all_pairs_distances(g);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (d(u, v) == 2) CHECK(realized_on_edge(levels, u, v, 2, 2));
}

TEST_CASE("realization is symmetric under swapping endpoints with the pattern") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracles::er_random_graph(5 + int(rng() % 15), 0.3, rng);
        auto levels = distance_levels(g);
        for (int rep = 0; rep < 20; ++rep) {
            int x = int(rng() % g.n());
            int y = int(rng() % g.n());
            int q = 1 + int(rng() % 4);
            int r = 1 + int(rng() % 4);
            if (x == y) continue;
            CHECK(realized_on_edge(levels, x, y, q, r) == realized_on_edge(levels, y, x, r, q));
        }
    }
}
