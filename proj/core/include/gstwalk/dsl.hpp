#pragma once

#include <iosfwd>
#include <string>

#include "gstwalk/generators.hpp"

namespace gstwalk {

/// Recursive-descent parse of the generator DSL:
///   hypercube:3  doublestar:4  path:5  cycle:6  complete:4  cbip:3,3
///   cmulti:3x2  paley:13  petersen  mckay
///   product(A,B)  join(A,B)  complement(A)     (nesting allowed)
/// Throws Error with the character position on malformed input.
GeneratorSpec parse_graph_dsl(const std::string& text);

/// Inverse of parse_graph_dsl on generator trees (edge lists render as
/// edge_list{n=..}).
std::string print_spec(const GeneratorSpec& spec);

/// Parsed time expression: plain value, or exact rational multiple of 2*pi
/// routed to the certification path.
struct TimeSpec {
    double value = 0.0;
    bool exact = false;  // 2pi:p/q form
    long p = 0;
    long q = 1;
};

/// Accepts decimal literals, "<coef>pi[/<den>]" (e.g. pi/2, 2pi/3, -pi,
/// 0.5pi), and the exact form "2pi:p/q".
TimeSpec parse_time(const std::string& text);

/// Edge-list text: first line "n <count>", then one 1-indexed "u v" pair
/// per line; '#' starts a comment.
GeneratorSpec parse_edge_list(std::istream& in);
GeneratorSpec parse_edge_list_text(const std::string& text);

/// 1-indexed comma-separated vertex list ("1,2,5"); empty or "-" for the
/// empty set.
VertexSet parse_vertex_list(const std::string& text, int universe);

} // namespace gstwalk
