#include "gstwalk/graph.hpp"

#include <deque>

#include "gstwalk/error.hpp"

namespace gstwalk {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n <= 0) throw Error("graph must have at least one vertex");
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw Error("edge endpoint outside 1.." + std::to_string(n_));
    if (a == b) throw Error("self-loops are not allowed");
    adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
    adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
}

int Graph::degree(int a) const {
    int d = 0;
    for (int b = 0; b < n_; ++b) d += adjacent(a, b);
    return d;
}

long Graph::edge_count() const {
    long twice = 0;
    for (int a = 0; a < n_; ++a) twice += degree(a);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<int> Graph::neighbors(int a) const {
    std::vector<int> out;
    for (int b = 0; b < n_; ++b)
        if (adjacent(a, b)) out.push_back(b);
    return out;
}

VertexSet Graph::neighborhood(int a) const {
    VertexSet s(n_);
    for (int b = 0; b < n_; ++b)
        if (adjacent(a, b)) s.set(b);
    return s;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adjacent(i, j)) a(i, j) = 1.0;
    return a;
}

std::vector<int> Graph::distances_from(int a) const {
    std::vector<int> dist(n_, -1);
    std::deque<int> q{a};
    dist[a] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v) && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool Graph::connected() const {
    auto d = distances_from(0);
    for (int v = 0; v < n_; ++v)
        if (d[v] < 0) return false;
    return true;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw Error("label count must match vertex count");
    labels_ = std::move(labels);
}

Graph cartesian_product(const Graph& x, const Graph& y) {
    const int nx = x.n(), ny = y.n();
    Graph g(nx * ny);
    auto idx = [ny](int a, int b) { return a * ny + b; };
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) {
            for (int b2 = b + 1; b2 < ny; ++b2)
                if (y.adjacent(b, b2)) g.add_edge(idx(a, b), idx(a, b2));
            for (int a2 = a + 1; a2 < nx; ++a2)
                if (x.adjacent(a, a2)) g.add_edge(idx(a, b), idx(a2, b));
        }
    return g;
}

Graph join(const Graph& x, const Graph& y) {
    const int nx = x.n(), ny = y.n();
    Graph g(nx + ny);
    for (auto [a, b] : x.edges()) g.add_edge(a, b);
    for (auto [a, b] : y.edges()) g.add_edge(nx + a, nx + b);
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) g.add_edge(a, nx + b);
    return g;
}

Graph complement(const Graph& x) {
    Graph g(x.n());
    for (int a = 0; a < x.n(); ++a)
        for (int b = a + 1; b < x.n(); ++b)
            if (!x.adjacent(a, b)) g.add_edge(a, b);
    return g;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& x) {
    if (!x.connected())
        throw Error("bipartition requires a connected graph (parts are ambiguous otherwise)");
    std::vector<int> color(x.n(), -1);
    std::deque<int> q{0};
    color[0] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : x.neighbors(u)) {
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                q.push_back(v);
            } else if (color[v] == color[u]) {
                return std::nullopt;
            }
        }
    }
    VertexSet v0(x.n()), v1(x.n());
    for (int v = 0; v < x.n(); ++v) (color[v] == 0 ? v0 : v1).set(v);
    return std::make_pair(v0, v1);
}

std::optional<SrgParams> recognize_srg(const Graph& x) {
    const int n = x.n();
    const int k = x.degree(0);
    for (int v = 1; v < n; ++v)
        if (x.degree(v) != k) return std::nullopt;

    long lambda = -1, mu = -1;
    bool saw_adjacent = false, saw_nonadjacent = false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            long common = 0;
            for (int c = 0; c < n; ++c)
                if (x.adjacent(a, c) && x.adjacent(b, c)) ++common;
            if (x.adjacent(a, b)) {
                if (saw_adjacent && common != lambda) return std::nullopt;
                lambda = common;
                saw_adjacent = true;
            } else {
                if (saw_nonadjacent && common != mu) return std::nullopt;
                mu = common;
                saw_nonadjacent = true;
            }
        }
    if (!saw_adjacent || !saw_nonadjacent) return std::nullopt;
    return SrgParams{n, k, lambda, mu};
}

} // namespace gstwalk
