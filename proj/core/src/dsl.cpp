#include "gstwalk/dsl.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "gstwalk/error.hpp"

namespace gstwalk {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw Error("DSL syntax error at position " + std::to_string(pos) + ": expected '" +
                        std::string(1, c) + "'");
        ++pos;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw Error("DSL syntax error at position " + std::to_string(pos) +
                        ": expected a family name");
        return text.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw Error("DSL syntax error at position " + std::to_string(pos) +
                        ": expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    GeneratorSpec expr() {
        const std::size_t at = pos;
        const std::string name = ident();
        GeneratorSpec spec;
        if (name == "product" || name == "join") {
            spec.family = name == "product" ? Family::product : Family::join;
            expect('(');
            spec.children.push_back(expr());
            expect(',');
            spec.children.push_back(expr());
            expect(')');
            return spec;
        }
        if (name == "complement") {
            spec.family = Family::complement;
            expect('(');
            spec.children.push_back(expr());
            expect(')');
            return spec;
        }
        if (name == "petersen") {
            spec.family = Family::petersen;
            return spec;
        }
        if (name == "mckay") {
            spec.family = Family::mckay;
            return spec;
        }

        static const std::pair<const char*, Family> leaves[] = {
            {"path", Family::path},
            {"cycle", Family::cycle},
            {"complete", Family::complete},
            {"cbip", Family::complete_bipartite},
            {"cmulti", Family::complete_multipartite},
            {"hypercube", Family::hypercube},
            {"doublestar", Family::double_star},
            {"paley", Family::paley},
        };
        for (auto [leaf, family] : leaves) {
            if (name != leaf) continue;
            spec.family = family;
            expect(':');
            spec.params.push_back(integer());
            if (family == Family::complete_bipartite) {
                expect(',');
                spec.params.push_back(integer());
            } else if (family == Family::complete_multipartite) {
                expect('x');
                spec.params.push_back(integer());
            }
            return spec;
        }
        throw Error("unknown graph family '" + name + "' at position " + std::to_string(at));
    }
};

} // namespace

GeneratorSpec parse_graph_dsl(const std::string& text) {
    Parser parser(text);
    GeneratorSpec spec = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw Error("DSL syntax error at position " + std::to_string(parser.pos) +
                    ": trailing input");
    return spec;
}

std::string print_spec(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::product:
            return "product(" + print_spec(spec.children.at(0)) + "," +
                   print_spec(spec.children.at(1)) + ")";
        case Family::join:
            return "join(" + print_spec(spec.children.at(0)) + "," +
                   print_spec(spec.children.at(1)) + ")";
        case Family::complement:
            return "complement(" + print_spec(spec.children.at(0)) + ")";
        case Family::petersen: return "petersen";
        case Family::mckay: return "mckay";
        case Family::complete_bipartite:
            return "cbip:" + std::to_string(spec.params.at(0)) + "," +
                   std::to_string(spec.params.at(1));
        case Family::complete_multipartite:
            return "cmulti:" + std::to_string(spec.params.at(0)) + "x" +
                   std::to_string(spec.params.at(1));
        case Family::edge_list: return "edge_list{n=" + std::to_string(spec.n) + "}";
        default:
            return std::string(family_name(spec.family)) + ":" +
                   std::to_string(spec.params.at(0));
    }
}

TimeSpec parse_time(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw Error("empty time expression");

    TimeSpec out;

    // Exact form 2pi:p/q
    if (text.rfind("2pi:", 0) == 0) {
        const std::string frac = text.substr(4);
        const auto slash = frac.find('/');
        try {
            if (slash == std::string::npos) {
                out.p = std::stol(frac);
                out.q = 1;
            } else {
                out.p = std::stol(frac.substr(0, slash));
                out.q = std::stol(frac.substr(slash + 1));
            }
        } catch (const std::exception&) {
            throw Error("malformed exact time '" + raw + "': expected 2pi:p/q");
        }
        if (out.q < 1) throw Error("exact time denominator must be >= 1");
        out.exact = true;
        out.value = 2.0 * M_PI * static_cast<double>(out.p) / static_cast<double>(out.q);
        return out;
    }

    const auto pi_at = text.find("pi");
    if (pi_at == std::string::npos) {
        try {
            std::size_t used = 0;
            out.value = std::stod(text, &used);
            if (used != text.size()) throw Error("");
        } catch (const std::exception&) {
            throw Error("malformed time expression '" + raw + "'");
        }
        return out;
    }

    // <coef>pi[/<den>]
    double coef = 1.0;
    const std::string head = text.substr(0, pi_at);
    if (head == "-") {
        coef = -1.0;
    } else if (!head.empty()) {
        try {
            std::size_t used = 0;
            coef = std::stod(head, &used);
            if (used != head.size()) throw Error("");
        } catch (const std::exception&) {
            throw Error("malformed time coefficient in '" + raw + "'");
        }
    }
    double den = 1.0;
    const std::string tail = text.substr(pi_at + 2);
    if (!tail.empty()) {
        if (tail[0] != '/') throw Error("malformed time expression '" + raw + "'");
        try {
            std::size_t used = 0;
            den = std::stod(tail.substr(1), &used);
            if (used != tail.size() - 1 || den == 0.0) throw Error("");
        } catch (const std::exception&) {
            throw Error("malformed time denominator in '" + raw + "'");
        }
    }
    out.value = coef * M_PI / den;
    return out;
}

GeneratorSpec parse_edge_list(std::istream& in) {
    GeneratorSpec spec;
    spec.family = Family::edge_list;
    std::string line;
    bool have_n = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_n) {
            std::string tag;
            long count = 0;
            if (!(ls >> tag)) continue;  // blank line before header
            if (tag != "n" || !(ls >> count) || count < 1)
                throw Error("edge list line " + std::to_string(lineno) +
                            ": expected header 'n <count>'");
            spec.n = static_cast<int>(count);
            have_n = true;
            continue;
        }
        long u = 0, v = 0;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw Error("edge list line " + std::to_string(lineno) +
                        ": expected 'u v' pair");
        if (u < 1 || v < 1 || u > spec.n || v > spec.n)
            throw Error("edge list line " + std::to_string(lineno) + ": vertex outside 1.." +
                        std::to_string(spec.n));
        spec.edge_pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (!have_n) throw Error("edge list is missing the 'n <count>' header");
    return spec;
}

GeneratorSpec parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

VertexSet parse_vertex_list(const std::string& text, int universe) {
    VertexSet s(universe);
    if (text.empty() || text == "-") return s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long v = 0;
        try {
            v = std::stol(item);
        } catch (const std::exception&) {
            throw Error("malformed vertex list entry '" + item + "'");
        }
        if (v < 1 || v > universe)
            throw Error("vertex " + std::to_string(v) + " outside 1.." +
                        std::to_string(universe));
        s.set(static_cast<int>(v - 1));
    }
    return s;
}

} // namespace gstwalk
