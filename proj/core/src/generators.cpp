#include "gstwalk/generators.hpp"

#include "gstwalk/error.hpp"

namespace gstwalk {

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "cbip";
        case Family::complete_multipartite: return "cmulti";
        case Family::hypercube: return "hypercube";
        case Family::double_star: return "doublestar";
        case Family::mckay: return "mckay";
        case Family::paley: return "paley";
        case Family::petersen: return "petersen";
        case Family::edge_list: return "edge_list";
        case Family::product: return "product";
        case Family::join: return "join";
        case Family::complement: return "complement";
    }
    return "?";
}

Graph make_path(int k) {
    if (k < 1) throw Error("path length parameter must be >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int k) {
    if (k < 3) throw Error("cycle needs at least 3 vertices");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph make_complete(int k) {
    if (k < 1) throw Error("complete graph needs at least 1 vertex");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error("complete bipartite parts must be >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph make_complete_multipartite(int parts, int part_size) {
    if (parts < 2) throw Error("complete multipartite needs >= 2 parts");
    if (part_size < 1) throw Error("complete multipartite part size must be >= 1");
    const int n = parts * part_size;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i / part_size != j / part_size) g.add_edge(i, j);
    return g;
}

Graph make_hypercube(int dim) {
    if (dim < 1) throw Error("hypercube dimension must be >= 1");
    if (dim > 20) throw Error("hypercube dimension too large");
    const int n = 1 << dim;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < dim; ++j)
            if (v < (v ^ (1 << j))) g.add_edge(v, v ^ (1 << j));
    return g;
}

Graph make_double_star(int k) {
    if (k < 1) throw Error("double star pendant count must be >= 1");
    const int n = 2 * k + 2;
    Graph g(n);
    // E = {1a | 2 <= a <= k+2} u {2a | k+3 <= a <= 2k+2}, 1-indexed.
    for (int a = 2; a <= k + 2; ++a) g.add_edge(0, a - 1);
    for (int a = k + 3; a <= 2 * k + 2; ++a) g.add_edge(1, a - 1);
    return g;
}

Graph make_mckay() {
    Graph g(8);
    const std::pair<int, int> edges[] = {
        {1, 3}, {1, 7}, {2, 3}, {2, 8}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}};
    for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
    return g;
}

Graph make_paley(long q) {
    if (q < 5) throw Error("paley order must be a prime >= 5");
    if (q % 4 != 1) throw Error("paley order must be = 1 (mod 4)");
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) throw Error("paley order must be prime (prime powers unsupported)");
    Graph g(static_cast<int>(q));
    std::vector<char> residue(q, 0);
    for (long x = 1; x < q; ++x) residue[(x * x) % q] = 1;
    for (long a = 0; a < q; ++a)
        for (long b = a + 1; b < q; ++b)
            if (residue[(b - a) % q]) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) subsets.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

namespace {

long param(const GeneratorSpec& s, std::size_t i, const char* what) {
    if (i >= s.params.size())
        throw Error(std::string(family_name(s.family)) + " is missing parameter: " + what);
    return s.params[i];
}

const GeneratorSpec& child(const GeneratorSpec& s, std::size_t i) {
    if (i >= s.children.size())
        throw Error(std::string(family_name(s.family)) + ": expected " +
                    (s.family == Family::complement ? "1 operand" : "2 operands"));
    return s.children[i];
}

} // namespace

Graph build(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(static_cast<int>(param(spec, 0, "length")));
        case Family::cycle: return make_cycle(static_cast<int>(param(spec, 0, "length")));
        case Family::complete: return make_complete(static_cast<int>(param(spec, 0, "order")));
        case Family::complete_bipartite:
            return make_complete_bipartite(static_cast<int>(param(spec, 0, "part a")),
                                           static_cast<int>(param(spec, 1, "part b")));
        case Family::complete_multipartite:
            return make_complete_multipartite(static_cast<int>(param(spec, 0, "parts")),
                                              static_cast<int>(param(spec, 1, "part size")));
        case Family::hypercube: return make_hypercube(static_cast<int>(param(spec, 0, "dimension")));
        case Family::double_star: return make_double_star(static_cast<int>(param(spec, 0, "k")));
        case Family::mckay: return make_mckay();
        case Family::paley: return make_paley(param(spec, 0, "order"));
        case Family::petersen: return make_petersen();
        case Family::edge_list: {
            if (spec.n < 1) throw Error("edge list graph needs n >= 1");
            Graph g(spec.n);
            for (auto [a, b] : spec.edge_pairs) g.add_edge(a, b);
            return g;
        }
        case Family::product: return cartesian_product(build(child(spec, 0)), build(child(spec, 1)));
        case Family::join: return join(build(child(spec, 0)), build(child(spec, 1)));
        case Family::complement: return complement(build(child(spec, 0)));
    }
    throw Error("unknown generator family");
}

} // namespace gstwalk
