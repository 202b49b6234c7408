#include <doctest.h>

#include <cmath>
#include <random>

#include "gstwalk/error.hpp"
#include "gstwalk/exact.hpp"
#include "gstwalk/generators.hpp"
#include "gstwalk/gst.hpp"

using namespace gstwalk;

namespace {

VertexSet set_of(int n, std::initializer_list<int> one_indexed) {
    VertexSet s(n);
    for (int v : one_indexed) s.set(v - 1);
    return s;
}

CyclotomicNumber from_coeffs(long q, std::initializer_list<long> cs) {
    CyclotomicNumber x;
    x.order = q;
    for (long c : cs) x.coeffs.push_back({std::to_string(c) + "/1"});
    while (static_cast<long>(x.coeffs.size()) < q) x.coeffs.push_back({"0/1"});
    return x;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("is_zero") {
    CHECK(is_zero(from_coeffs(4, {1, 0, 1, 0})));      // 1 + zeta_4^2 = 0
    CHECK(is_zero(from_coeffs(3, {1, 1, 1})));         // 1 + zeta_3 + zeta_3^2 = 0
    CHECK_FALSE(is_zero(from_coeffs(5, {1, 1, 0, 0, 0})));  // 1 + zeta_5
    CHECK_FALSE(is_zero(from_coeffs(4, {0, 1, 0, 0})));     // zeta_4 = i
    CHECK(is_zero(from_coeffs(6, {0, 0, 1, 0, 0, 1})));     // zeta^2 + zeta^5 = zeta^2(1+zeta^3)
}

TEST_CASE("rational_projectors") {
    SUBCASE("K2: exact half matrices") {
        const auto projs = rational_projectors(make_complete(2));
        REQUIRE(projs.size() == 2);
        CHECK(projs[0].first == 1);
        CHECK(projs[1].first == -1);
        CHECK(projs[0].second.entry(0, 0) == "1/2");
        CHECK(projs[0].second.entry(0, 1) == "1/2");
        CHECK(projs[1].second.entry(0, 1) == "-1/2");
    }
    SUBCASE("double_star(2): five exact projectors summing to I") {
        const auto projs = rational_projectors(make_double_star(2));
        REQUIRE(projs.size() == 5);
        CHECK(projs[0].first == 2);
        CHECK(projs[4].first == -2);
        CHECK(projectors_sum_to_identity(projs));
        CHECK(projectors_orthogonal_idempotent(projs));
    }
    SUBCASE("hypercube(3): dyadic rational entries") {
        const auto projs = rational_projectors(make_hypercube(3));
        REQUIRE(projs.size() == 4);
        CHECK(projectors_sum_to_identity(projs));
        CHECK(projectors_orthogonal_idempotent(projs));
        for (const auto& [theta, e] : projs) {
            const std::string den = e.entry(0, 0).substr(e.entry(0, 0).find('/') + 1);
            const long d = std::stol(den);
            CHECK((d & (d - 1)) == 0);  // power of two
        }
    }
    SUBCASE("non-integer spectra are rejected with the offending eigenvalue") {
        CHECK_THROWS_WITH_AS(rational_projectors(make_path(3)),
                             doctest::Contains("non-integer spectrum"), Error);
    }
}

TEST_CASE("entry_at_rational_time") {
    const auto projs = rational_projectors(make_complete(2));
    SUBCASE("K2 entry (2,1) at 2pi/4 is i") {
        const CyclotomicNumber x = entry_at_rational_time(projs, 0, 1, 1, 4);
        // (1/2) zeta_4 - (1/2) zeta_4^3
        CHECK(x.coeffs[0].value == "0/1");
        CHECK(x.coeffs[1].value == "1/2");
        CHECK(x.coeffs[2].value == "0/1");
        CHECK(x.coeffs[3].value == "-1/2");
        CHECK_FALSE(is_zero(x));
    }
    SUBCASE("K2 entry (1,1) at 2pi/4 is zero") {
        // (1/2) zeta_4 + (1/2) zeta_4^3 = (i - i)/2 = 0
        const CyclotomicNumber x = entry_at_rational_time(projs, 0, 0, 1, 4);
        CHECK(x.coeffs[1].value == "1/2");
        CHECK(x.coeffs[3].value == "1/2");
        CHECK(is_zero(x));
    }
    SUBCASE("double_star(2) leaf-to-center entries vanish at 2pi/3") {
        const auto ds = rational_projectors(make_double_star(2));
        // alpha entry: row 3 (leaf of center 1), column 1
        CHECK(is_zero(entry_at_rational_time(ds, 0, 2, 1, 3)));
        // beta entry: row 5 (leaf of center 2), column 1
        CHECK(is_zero(entry_at_rational_time(ds, 0, 4, 1, 3)));
        // center-to-center does not vanish
        CHECK_FALSE(is_zero(entry_at_rational_time(ds, 0, 0, 1, 3)));
    }
}

TEST_CASE("certify_gst") {
    SUBCASE("hypercube(3): (V0,V1) certified at 2pi*(1/4)") {
        const Graph q3 = make_hypercube(3);
        const auto parts = bipartition(q3);
        REQUIRE(parts.has_value());
        const Certificate cert = certify_gst(q3, parts->first, parts->second, 1, 4);
        CHECK(cert.verdict == CertVerdict::certified_gst);
        CHECK(cert.zero_entries.size() == 16);  // 4 columns x 4 outside rows
        CHECK(cert.graph_hash == graph_hash(q3));
    }
    SUBCASE("double_star(2): centers certified periodic at 2pi*(1/3)") {
        const Graph ds = make_double_star(2);
        const Certificate cert =
            certify_gst(ds, set_of(6, {1, 2}), set_of(6, {1, 2}), 1, 3);
        CHECK(cert.verdict == CertVerdict::certified_gst);
    }
    SUBCASE("K2: ({1},{1}) at 2pi*(1/4) is refuted with witness (2,1)") {
        const Certificate cert =
            certify_gst(make_complete(2), set_of(2, {1}), set_of(2, {1}), 1, 4);
        CHECK(cert.verdict == CertVerdict::certified_not_gst);
        REQUIRE(cert.nonzero_witness.has_value());
        CHECK(*cert.nonzero_witness == std::make_pair(1, 0));
    }
    SUBCASE("p/q is gcd-reduced") {
        const Graph q3 = make_hypercube(3);
        const auto parts = bipartition(q3);
        const Certificate cert = certify_gst(q3, parts->first, parts->second, 2, 8);
        CHECK(cert.p == 1);
        CHECK(cert.q == 4);
        CHECK(cert.verdict == CertVerdict::certified_gst);
    }
    SUBCASE("agreement with the floating-point residual") {
        const Graph ds = make_double_star(2);
        const Spectrum spec = decompose(ds);
        const VertexSet centers = set_of(6, {1, 2});
        const Certificate good = certify_gst(ds, centers, centers, 1, 3);
        CHECK(good.verdict == CertVerdict::certified_gst);
        CHECK(has_gst(spec, centers, centers, 2 * M_PI / 3).residual < 1e-8);

        const VertexSet half = set_of(6, {1});
        const Certificate bad = certify_gst(ds, half, half, 1, 3);
        CHECK(bad.verdict == CertVerdict::certified_not_gst);
        CHECK(has_gst(spec, half, half, 2 * M_PI / 3).residual > 1e-4);
    }
}

TEST_CASE("zeta_q^q reduction never changes verdicts") {
    // Structural identity: appending c*(X^q - 1) multiples, i.e. rotating
    // exponents by q, leaves is_zero unchanged.
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (long q : {3L, 4L, 6L, 8L, 12L}) {
        for (int it = 0; it < 50; ++it) {
            CyclotomicNumber x;
            x.order = q;
            std::vector<long> raw;
            for (long j = 0; j < 2 * q; ++j) raw.push_back(coeff(rng));
            // reduce exponents mod q in two mathematically equal ways
            CyclotomicNumber direct;
            direct.order = q;
            std::vector<long> folded(q, 0);
            for (long j = 0; j < 2 * q; ++j) folded[j % q] += raw[j];
            for (long j = 0; j < q; ++j)
                direct.coeffs.push_back({std::to_string(folded[j]) + "/1"});

            // same fold but through exact addition of the two halves
            CyclotomicNumber summed;
            summed.order = q;
            for (long j = 0; j < q; ++j)
                summed.coeffs.push_back(
                    exact_add({std::to_string(raw[j]) + "/1"},
                              {std::to_string(raw[j + q]) + "/1"}));
            CHECK(is_zero(direct) == is_zero(summed));
        }
    }
    // Phi_q(zeta_q) = 0 structurally
    for (long q : {2L, 3L, 4L, 5L, 6L, 12L}) {
        CyclotomicNumber phi_at_zeta;
        phi_at_zeta.order = q;
        phi_at_zeta.coeffs.assign(q, {"0/1"});
        const auto phi = cyclotomic_polynomial(q);
        for (std::size_t j = 0; j < phi.size(); ++j) {
            const long e = static_cast<long>(j) % q;
            phi_at_zeta.coeffs[e] =
                exact_add(phi_at_zeta.coeffs[e], {std::to_string(phi[j]) + "/1"});
        }
        CHECK(is_zero(phi_at_zeta));
    }
}
