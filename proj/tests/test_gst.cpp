#include <doctest.h>

#include <cmath>
#include <random>

#include "gstwalk/error.hpp"
#include "gstwalk/generators.hpp"
#include "gstwalk/gst.hpp"

using namespace gstwalk;

namespace {

VertexSet set_of(int n, std::initializer_list<int> one_indexed) {
    VertexSet s(n);
    for (int v : one_indexed) s.set(v - 1);
    return s;
}

} // namespace

TEST_CASE("forward_set") {
    SUBCASE("empty source maps to empty") {
        const Spectrum s = decompose(make_cycle(5));
        CHECK(forward_set(s, VertexSet(5), 1.3).empty());
    }
    SUBCASE("K2 at pi/2 swaps the singletons") {
        const Spectrum s = decompose(make_complete(2));
        CHECK(forward_set(s, set_of(2, {1}), M_PI / 2) == set_of(2, {2}));
    }
    SUBCASE("hypercube(3): singleton to antipode at pi/2") {
        const Spectrum s = decompose(make_hypercube(3));
        for (int v = 0; v < 8; ++v) {
            VertexSet from(8), to(8);
            from.set(v);
            to.set(v ^ 7);
            CHECK(forward_set(s, from, M_PI / 2) == to);
        }
    }
    SUBCASE("double_star(2): centers fixed as a set at 2pi/3") {
        const Spectrum s = decompose(make_double_star(2));
        CHECK(forward_set(s, set_of(6, {1, 2}), 2 * M_PI / 3) == set_of(6, {1, 2}));
    }
}

TEST_CASE("inverse_set and closure") {
    SUBCASE("I(V,t) = V and I(empty,t) = empty") {
        const Spectrum s = decompose(make_petersen());
        CHECK(inverse_set(s, VertexSet::full(10), 0.9) == VertexSet::full(10));
        CHECK(inverse_set(s, VertexSet(10), 0.9).empty());
    }
    SUBCASE("K2: I({2}, pi/2) = {1}") {
        const Spectrum s = decompose(make_complete(2));
        CHECK(inverse_set(s, set_of(2, {2}), M_PI / 2) == set_of(2, {1}));
    }
    SUBCASE("closure of empty is empty") {
        const Spectrum s = decompose(make_cycle(4));
        CHECK(closure(s, VertexSet(4), 0.7).empty());
    }
    SUBCASE("hypercube(2) at pi/2: every singleton is closed") {
        const Spectrum s = decompose(make_hypercube(2));
        for (int v = 0; v < 4; ++v) {
            VertexSet single(4);
            single.set(v);
            CHECK(closure(s, single, M_PI / 2) == single);
        }
    }
    SUBCASE("K3 at t=1: closure of a singleton is everything") {
        const Spectrum s = decompose(make_complete(3));
        CHECK(closure(s, set_of(3, {1}), 1.0) == VertexSet::full(3));
    }
}

TEST_CASE("has_gst and classification") {
    SUBCASE("(empty, T) holds at any time") {
        const Spectrum s = decompose(make_mckay());
        const GSTReport r = has_gst(s, VertexSet(8), set_of(8, {2}), 0.83);
        CHECK(r.holds);
        CHECK(r.classification.trivial);
    }
    SUBCASE("(S, V) is trivial with zero residual") {
        const Spectrum s = decompose(make_petersen());
        const GSTReport r = has_gst(s, set_of(10, {1, 5}), VertexSet::full(10), 2.1);
        CHECK(r.holds);
        CHECK(r.residual == 0.0);
        CHECK(r.classification.trivial);
    }
    SUBCASE("K2 PST at pi/2") {
        const Spectrum s = decompose(make_complete(2));
        const GSTReport r = has_gst(s, set_of(2, {1}), set_of(2, {2}), M_PI / 2);
        CHECK(r.holds);
        CHECK(r.residual < 1e-12);
        CHECK(r.classification.pst);
        CHECK(r.classification.bijective);
        CHECK(r.classification.maximal);
        CHECK_FALSE(r.classification.periodic);
    }
    SUBCASE("K3 vertex periodic at 2pi/3") {
        // U(2pi/3)_{21} = (e^{4pi i/3} - e^{-2pi i/3})/3 = 0.
        const Spectrum s = decompose(make_complete(3));
        const GSTReport r = has_gst(s, set_of(3, {1}), set_of(3, {1}), 2 * M_PI / 3);
        CHECK(r.holds);
        CHECK(r.classification.periodic);
        CHECK(r.classification.bijective);
    }
    SUBCASE("K2 fractional revival at pi/4, proper") {
        const Spectrum s = decompose(make_complete(2));
        const GSTReport r = has_gst(s, set_of(2, {1}), set_of(2, {1, 2}), M_PI / 4);
        CHECK(r.holds);
        CHECK(r.classification.fractional_revival);
        CHECK(r.classification.proper_fractional_revival);
        // at the PST time the revival pair is no longer proper
        const GSTReport rp = has_gst(s, set_of(2, {1}), set_of(2, {1, 2}), M_PI / 2);
        CHECK(rp.holds);
        CHECK(rp.classification.fractional_revival);
        CHECK_FALSE(rp.classification.proper_fractional_revival);
    }
    SUBCASE("negative verdict carries the max offending magnitude") {
        const Spectrum s = decompose(make_complete(3));
        const GSTReport r = has_gst(s, set_of(3, {1}), set_of(3, {2}), 1.0);
        CHECK_FALSE(r.holds);
        CHECK(r.residual > 0.1);
    }
}

TEST_CASE("complement_transfer") {
    const Spectrum k2 = decompose(make_complete(2));
    SUBCASE("K2 complements of ({1},{2}) at pi/2 hold") {
        CHECK(complement_transfer(k2, set_of(2, {1}), set_of(2, {2}), M_PI / 2).holds);
    }
    SUBCASE("complement of an (empty,T) pair holds trivially") {
        const Spectrum s = decompose(make_cycle(5));
        CHECK(complement_transfer(s, VertexSet(5), set_of(5, {2, 3}), 0.77).holds);
    }
    SUBCASE("K222: ({1}, V minus X(1)) at pi implies (X(1), V minus {1})") {
        const Graph g = make_complete_multipartite(3, 2);
        const Spectrum s = decompose(g);
        const VertexSet src = set_of(6, {1});
        const VertexSet tgt = g.neighborhood(0).complement();
        CHECK(has_gst(s, src, tgt, M_PI).holds);
        const GSTReport comp = complement_transfer(s, src, tgt, M_PI);
        CHECK(comp.holds);
        CHECK(comp.source == g.neighborhood(0));
        CHECK(comp.target == set_of(6, {1}).complement());
    }
}

TEST_CASE("equal_card_structure") {
    SUBCASE("K2 bijective witness: all clauses, U(pi) = -I makes S periodic") {
        const Spectrum s = decompose(make_complete(2));
        const EqualCardReport rep =
            equal_card_structure(s, set_of(2, {1}), set_of(2, {2}), M_PI / 2);
        CHECK(rep.all_hold);
        REQUIRE(rep.clauses.size() == 6);
        for (const auto& c : rep.clauses) CHECK(c.residual < 1e-12);
    }
    SUBCASE("double_star(2) with S = T") {
        const Spectrum s = decompose(make_double_star(2));
        const EqualCardReport rep =
            equal_card_structure(s, set_of(6, {1, 2}), set_of(6, {1, 2}), 2 * M_PI / 3);
        CHECK(rep.all_hold);
    }
    SUBCASE("hypercube(2) product witness") {
        const Spectrum s = decompose(make_hypercube(2));
        const EqualCardReport rep =
            equal_card_structure(s, set_of(4, {1}), set_of(4, {4}), M_PI / 2);
        CHECK(rep.all_hold);
    }
    SUBCASE("precondition violations throw") {
        const Spectrum s = decompose(make_complete(2));
        CHECK_THROWS_AS(equal_card_structure(s, set_of(2, {1}), set_of(2, {1, 2}), 0.3),
                        Error);
        CHECK_THROWS_AS(equal_card_structure(s, set_of(2, {1}), set_of(2, {2}), 0.3), Error);
    }
    SUBCASE("Frobenius consequence: U(t)[T,S] unitary for bijective witnesses") {
        const Spectrum s = decompose(make_hypercube(3));
        const Eigen::MatrixXcd u = transition(s, M_PI / 2);
        const VertexSet src = set_of(8, {1, 2, 5});
        VertexSet tgt(8);
        for (int v : src.members()) tgt.set(v ^ 7);
        REQUIRE(has_gst(s, src, tgt, M_PI / 2).holds);
        Eigen::MatrixXcd block(3, 3);
        const auto rows = tgt.members(), cols = src.members();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) block(i, j) = u(rows[i], cols[j]);
        CHECK((block * block.adjoint() - Eigen::MatrixXcd::Identity(3, 3))
                  .cwiseAbs()
                  .maxCoeff() < 1e-8);
    }
}

TEST_CASE("parallel_check") {
    SUBCASE("K2 singletons are parallel at every eigenvalue") {
        const Spectrum s = decompose(make_complete(2));
        const ParallelCheck pc = parallel_check(s, set_of(2, {1}), set_of(2, {2}));
        CHECK(pc.all_equal);
    }
    SUBCASE("S = T is trivially parallel") {
        const Spectrum s = decompose(make_double_star(2));
        CHECK(parallel_check(s, set_of(6, {1, 2}), set_of(6, {1, 2})).all_equal);
    }
    SUBCASE("P3 singletons 1,2 fail at the zero eigenvalue") {
        const Spectrum s = decompose(make_path(3));
        const ParallelCheck pc = parallel_check(s, set_of(3, {1}), set_of(3, {2}));
        CHECK_FALSE(pc.all_equal);
        // theta = (sqrt2, 0, -sqrt2); E_0 kills e_2 but not e_1
        CHECK_FALSE(pc.equal_span[1]);
        CHECK(pc.equal_span[0]);
        CHECK(pc.equal_span[2]);
    }
    SUBCASE("bijective GST implies parallel subsets") {
        const Spectrum s = decompose(make_hypercube(3));
        const VertexSet src = set_of(8, {1, 4, 6});
        VertexSet tgt(8);
        for (int v : src.members()) tgt.set(v ^ 7);
        CHECK(parallel_check(s, src, tgt).all_equal);
    }
}

TEST_CASE("gst lattice and order properties") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> td(-10.0, 10.0);
    std::vector<std::pair<Graph, Spectrum>> pool;
    for (const Graph& g : {make_path(5), make_cycle(6), make_double_star(2), make_mckay(),
                           make_complete(4)})
        pool.emplace_back(g, decompose(g));

    auto random_subset = [&](int n) {
        VertexSet s(n);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int v = 0; v < n; ++v)
            if (coin(rng)) s.set(v);
        return s;
    };

    for (int it = 0; it < 300; ++it) {
        const auto& [g, spec] = pool[it % pool.size()];
        const int n = g.n();
        const double t = td(rng);
        const VertexSet s1 = random_subset(n), s2 = random_subset(n);
        const VertexSet f1 = forward_set(spec, s1, t), f2 = forward_set(spec, s2, t);

        // monotone in both arguments
        VertexSet smaller = s1;
        if (!smaller.empty()) smaller.reset(smaller.members()[0]);
        CHECK(has_gst(spec, smaller, f1.union_with(s2), t).holds);
        // intersection / union laws
        CHECK(has_gst(spec, s1.intersect_with(s2), f1.intersect_with(f2), t).holds);
        CHECK(has_gst(spec, s1.union_with(s2), f1.union_with(f2), t).holds);
        // time reversal: identical residuals
        const GSTReport fwd = has_gst(spec, s1, s2, t);
        const GSTReport rev = has_gst(spec, s1, s2, -t);
        CHECK(fwd.holds == rev.holds);
        CHECK(std::abs(fwd.residual - rev.residual) <= 1e-12);
        // cardinality bound
        CHECK(f1.count() >= s1.count());
        // transitivity through the forward image
        const double t2 = td(rng);
        const VertexSet mid = forward_set(spec, s1, t);
        const VertexSet far = forward_set(spec, mid, t2);
        CHECK(has_gst(spec, s1, far, t + t2, 2.0 * n * kDefaultZeroTol).holds);
    }
}
