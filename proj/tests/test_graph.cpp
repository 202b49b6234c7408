#include <doctest.h>

#include <algorithm>
#include <random>

#include "gstwalk/error.hpp"
#include "gstwalk/generators.hpp"
#include "gstwalk/graph.hpp"

using namespace gstwalk;

namespace {

void check_simple(const Graph& g) {
    long degree_sum = 0;
    for (int a = 0; a < g.n(); ++a) {
        CHECK_FALSE(g.adjacent(a, a));
        degree_sum += g.degree(a);
        for (int b = 0; b < g.n(); ++b) CHECK(g.adjacent(a, b) == g.adjacent(b, a));
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

} // namespace

TEST_CASE("generator basics") {
    SUBCASE("hypercube(1) is K2") {
        const Graph g = make_hypercube(1);
        CHECK(g.n() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("double_star(2) degree sequence and adjacent centers") {
        const Graph g = make_double_star(2);
        CHECK(g.n() == 6);
        std::vector<int> degs;
        for (int v = 0; v < 6; ++v) degs.push_back(g.degree(v));
        std::sort(degs.rbegin(), degs.rend());
        CHECK(degs == std::vector<int>{3, 3, 1, 1, 1, 1});
        CHECK(g.adjacent(0, 1));
    }
    SUBCASE("mckay: 8 vertices, 9 edges, hubs 3 and 6") {
        const Graph g = make_mckay();
        CHECK(g.n() == 8);
        CHECK(g.edge_count() == 9);
        CHECK(g.degree(2) == 3);
        CHECK(g.degree(5) == 3);
        for (int v : {0, 1, 3, 4, 6, 7}) CHECK(g.degree(v) == 2);
        // three internally disjoint 3-paths between the hubs
        auto d = g.distances_from(2);
        CHECK(d[5] == 3);
        CHECK_FALSE(g.adjacent(2, 5));
    }
    SUBCASE("petersen is 3-regular on 10 vertices") {
        const Graph g = make_petersen();
        CHECK(g.n() == 10);
        for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    }
    SUBCASE("paley(13) is 6-regular; invalid orders rejected") {
        const Graph g = make_paley(13);
        CHECK(g.n() == 13);
        for (int v = 0; v < 13; ++v) CHECK(g.degree(v) == 6);
        CHECK_THROWS_AS(make_paley(15), Error);  // not prime
        CHECK_THROWS_AS(make_paley(7), Error);   // 3 mod 4
        CHECK_THROWS_AS(make_hypercube(0), Error);
    }
    SUBCASE("every generator output is simple with the handshake identity") {
        for (const Graph& g :
             {make_path(5), make_cycle(6), make_complete(4), make_complete_bipartite(3, 3),
              make_complete_multipartite(3, 2), make_hypercube(3), make_double_star(4),
              make_mckay(), make_paley(13), make_petersen()})
            check_simple(g);
    }
}

TEST_CASE("cartesian product") {
    SUBCASE("K2 x K2 is C4") {
        const Graph g = cartesian_product(make_complete(2), make_complete(2));
        CHECK(g.n() == 4);
        CHECK(g.edge_count() == 4);
        for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    }
    SUBCASE("K2 x P3 is the 6-vertex ladder with 7 edges") {
        const Graph g = cartesian_product(make_complete(2), make_path(3));
        CHECK(g.n() == 6);
        CHECK(g.edge_count() == 7);
    }
    SUBCASE("X x K1 is X up to labels") {
        const Graph x = make_cycle(5);
        const Graph g = cartesian_product(x, make_complete(1));
        CHECK(g == x);
    }
    SUBCASE("degree additivity") {
        const Graph x = make_double_star(2), y = make_cycle(4);
        const Graph g = cartesian_product(x, y);
        for (int a = 0; a < x.n(); ++a)
            for (int b = 0; b < y.n(); ++b)
                CHECK(g.degree(a * y.n() + b) == x.degree(a) + y.degree(b));
    }
}

TEST_CASE("join and complement") {
    SUBCASE("K1 + K2 = K3") {
        const Graph g = join(make_complete(1), make_complete(2));
        CHECK(g == make_complete(3));
    }
    SUBCASE("2K1 + 2K1 = K_{2,2}") {
        const Graph g = join(Graph(2), Graph(2));
        CHECK(g.edge_count() == 4);
        for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    }
    SUBCASE("K1 + C4 is the 5-wheel") {
        const Graph g = join(make_complete(1), make_cycle(4));
        CHECK(g.n() == 5);
        CHECK(g.edge_count() == 8);
        CHECK(g.degree(0) == 4);
    }
    SUBCASE("complement(3K2) = K_{2,2,2}") {
        Graph three_k2(6);
        three_k2.add_edge(0, 3);
        three_k2.add_edge(1, 4);
        three_k2.add_edge(2, 5);
        const Graph comp = complement(three_k2);
        const auto params = recognize_srg(comp);
        REQUIRE(params.has_value());
        CHECK(*params == SrgParams{6, 4, 2, 4});
    }
    SUBCASE("complement is an involution; complement of complete is empty") {
        const Graph x = make_double_star(3);
        CHECK(complement(complement(x)) == x);
        CHECK(complement(make_complete(5)).edge_count() == 0);
    }
}

TEST_CASE("bipartition") {
    SUBCASE("K2") {
        const auto parts = bipartition(make_complete(2));
        REQUIRE(parts.has_value());
        CHECK(parts->first.members() == std::vector<int>{0});
        CHECK(parts->second.members() == std::vector<int>{1});
    }
    SUBCASE("hypercube(3) splits by parity 4+4") {
        const auto parts = bipartition(make_hypercube(3));
        REQUIRE(parts.has_value());
        CHECK(parts->first.count() == 4);
        CHECK(parts->second.count() == 4);
        for (int v : parts->first.members()) CHECK(__builtin_popcount(v) % 2 == 0);
    }
    SUBCASE("odd cycle has none") { CHECK_FALSE(bipartition(make_complete(3)).has_value()); }
    SUBCASE("disconnected input is rejected") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        CHECK_THROWS_AS(bipartition(g), Error);
    }
    SUBCASE("no edge inside either part") {
        for (const Graph& g : {make_hypercube(4), make_path(7), make_complete_bipartite(3, 4)}) {
            const auto parts = bipartition(g);
            REQUIRE(parts.has_value());
            for (auto [a, b] : g.edges())
                CHECK(parts->first.test(a) != parts->first.test(b));
        }
    }
}

TEST_CASE("srg recognition") {
    SUBCASE("petersen") {
        const auto p = recognize_srg(make_petersen());
        REQUIRE(p.has_value());
        CHECK(*p == SrgParams{10, 3, 0, 1});
        CHECK(p->feasible());
    }
    SUBCASE("K222") {
        const auto p = recognize_srg(make_complete_multipartite(3, 2));
        REQUIRE(p.has_value());
        CHECK(*p == SrgParams{6, 4, 2, 4});
    }
    SUBCASE("P3 is not srg") { CHECK_FALSE(recognize_srg(make_path(3)).has_value()); }
    SUBCASE("recognized parameters always satisfy the feasibility identity") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g(6);
            for (int a = 0; a < 6; ++a)
                for (int b = a + 1; b < 6; ++b)
                    if (unit(rng) < 0.5) g.add_edge(a, b);
            if (auto p = recognize_srg(g)) CHECK(p->feasible());
        }
    }
}

TEST_CASE("edge list graph build errors") {
    GeneratorSpec spec;
    spec.family = Family::edge_list;
    spec.n = 3;
    spec.edge_pairs = {{0, 1}, {1, 2}};
    CHECK(build(spec) == make_path(3));
    spec.edge_pairs.push_back({2, 5});
    CHECK_THROWS_AS(build(spec), Error);
}
