#include <doctest.h>

#include <cmath>

#include "gstwalk/dsl.hpp"
#include "gstwalk/error.hpp"
#include "gstwalk/report.hpp"

using namespace gstwalk;

TEST_CASE("parse_graph_dsl") {
    SUBCASE("leaves") {
        CHECK(build(parse_graph_dsl("hypercube:3")) == make_hypercube(3));
        CHECK(build(parse_graph_dsl("doublestar:4")) == make_double_star(4));
        CHECK(build(parse_graph_dsl("cbip:3,3")) == make_complete_bipartite(3, 3));
        CHECK(build(parse_graph_dsl("cmulti:3x2")) == make_complete_multipartite(3, 2));
        CHECK(build(parse_graph_dsl("petersen")) == make_petersen());
    }
    SUBCASE("composites with nesting") {
        CHECK(build(parse_graph_dsl("join(complete:1, complete:2)")) == make_complete(3));
        const GeneratorSpec deep =
            parse_graph_dsl("product(hypercube:2, join(complete:1, cycle:4))");
        CHECK(deep.family == Family::product);
        CHECK(build(deep).n() == 4 * 5);
        CHECK(build(parse_graph_dsl("complement(complement(mckay))")) == make_mckay());
    }
    SUBCASE("errors carry position information") {
        CHECK_THROWS_WITH_AS(parse_graph_dsl("noSuch:3"), doctest::Contains("unknown graph"),
                             Error);
        CHECK_THROWS_AS(parse_graph_dsl("product(path:2"), Error);
        CHECK_THROWS_AS(parse_graph_dsl("path:"), Error);
        CHECK_THROWS_AS(parse_graph_dsl("path:3 trailing"), Error);
        CHECK_THROWS_AS(parse_graph_dsl("cbip:3"), Error);
    }
    SUBCASE("print round-trip: parse . print . parse is the identity") {
        for (const char* text :
             {"hypercube:3", "doublestar:2", "cbip:2,5", "cmulti:3x2", "petersen", "mckay",
              "product(doublestar:2,path:2)", "join(complete:1,cycle:4)",
              "complement(product(path:3,path:2))"}) {
            const GeneratorSpec once = parse_graph_dsl(text);
            const GeneratorSpec twice = parse_graph_dsl(print_spec(once));
            CHECK(once == twice);
            CHECK(print_spec(once) == print_spec(twice));
        }
    }
}

TEST_CASE("parse_time") {
    CHECK(parse_time("pi/2").value == doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(parse_time("2pi/3").value == doctest::Approx(2 * M_PI / 3).epsilon(1e-15));
    CHECK(parse_time("1.25").value == doctest::Approx(1.25));
    CHECK(parse_time("-pi").value == doctest::Approx(-M_PI));
    CHECK(parse_time("0.5pi").value == doctest::Approx(M_PI / 2));
    CHECK_FALSE(parse_time("pi/2").exact);

    const TimeSpec exact = parse_time("2pi:1/3");
    CHECK(exact.exact);
    CHECK(exact.p == 1);
    CHECK(exact.q == 3);
    CHECK(exact.value == doctest::Approx(2 * M_PI / 3));

    CHECK_THROWS_AS(parse_time("abc"), Error);
    CHECK_THROWS_AS(parse_time("2pi:1/0"), Error);
    CHECK_THROWS_AS(parse_time("pi/x"), Error);
    CHECK_THROWS_AS(parse_time(""), Error);
}

TEST_CASE("edge list parsing") {
    SUBCASE("happy path with comments") {
        const GeneratorSpec spec = parse_edge_list_text(
            "# a path on three vertices\n"
            "n 3\n"
            "1 2\n"
            "2 3  # second edge\n");
        CHECK(build(spec) == make_path(3));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_edge_list_text("1 2\n"), Error);
        CHECK_THROWS_AS(parse_edge_list_text("n 2\n1 5\n"), Error);
        CHECK_THROWS_AS(parse_edge_list_text("n 2\n1\n"), Error);
        CHECK_THROWS_AS(parse_edge_list_text(""), Error);
    }
}

TEST_CASE("parse_vertex_list") {
    CHECK(parse_vertex_list("1,2,5", 6).members() == std::vector<int>{0, 1, 4});
    CHECK(parse_vertex_list("", 4).empty());
    CHECK(parse_vertex_list("-", 4).empty());
    CHECK_THROWS_AS(parse_vertex_list("0", 4), Error);
    CHECK_THROWS_AS(parse_vertex_list("5", 4), Error);
    CHECK_THROWS_AS(parse_vertex_list("x", 4), Error);
}

TEST_CASE("report JSON") {
    SUBCASE("vertex sets serialize as sorted 1-indexed arrays") {
        VertexSet s(6);
        s.set(4);
        s.set(0);
        CHECK(to_json(s).dump() == "[1,5]");
    }
    SUBCASE("complex numbers as [re,im]") {
        CHECK(to_json(std::complex<double>(0.0, 1.0)).dump() == "[0.0,1.0]");
    }
    SUBCASE("reports round-trip byte-identically") {
        const Graph g = make_double_star(2);
        const Spectrum spec = decompose(g);
        const GSTReport rep = has_gst(spec, parse_vertex_list("1,2", 6),
                                      parse_vertex_list("1,2", 6), 2 * M_PI / 3);
        const Json report = make_report("check doublestar:2", graph_summary(g, &spec),
                                        to_json(rep),
                                        Json{{"zero_tol", rep.zero_tol}}, {"a warning"});
        const std::string once = report.dump(2);
        const std::string twice = Json::parse(once).dump(2);
        CHECK(once == twice);
        const std::string thrice = Json::parse(twice).dump(2);
        CHECK(twice == thrice);
    }
    SUBCASE("scan results round-trip byte-identically") {
        const Spectrum spec = decompose(make_complete(2));
        const ScanResult scan = entry_zero_scan(spec, 0.0, M_PI, 1e-2);
        Json results = to_json(scan);
        results["monogamy_audit"] = to_json(monogamy_audit(scan));
        const std::string once = results.dump();
        CHECK(once == Json::parse(once).dump());
    }
    SUBCASE("schema version present") {
        const Json r = make_report("x", Json::object(), Json::object(), Json::object(), {});
        CHECK(r["schema_version"] == kSchemaVersion);
    }
}
