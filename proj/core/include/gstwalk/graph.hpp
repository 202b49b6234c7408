#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gstwalk/vertex_set.hpp"

namespace gstwalk {

/// Strongly regular graph parameters (nu, kappa, lambda, mu).
struct SrgParams {
    long nu = 0;
    long kappa = 0;
    long lambda = 0;
    long mu = 0;

    /// kappa*(kappa-lambda-1) == (nu-kappa-1)*mu
    bool feasible() const {
        return kappa * (kappa - lambda - 1) == (nu - kappa - 1) * mu;
    }
    bool operator==(const SrgParams&) const = default;
};

/// Finite simple undirected graph with canonical vertex indexing.
/// Vertices are 0-indexed internally; all I/O surfaces are 1-indexed.
/// Immutable once built; safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    bool adjacent(int a, int b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    void add_edge(int a, int b);

    int degree(int a) const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int a) const;
    VertexSet neighborhood(int a) const;

    /// Dense adjacency matrix (symmetric, zero diagonal, 0/1 entries).
    Eigen::MatrixXd adjacency_matrix() const;

    /// BFS distances from a; -1 for unreachable vertices.
    std::vector<int> distances_from(int a) const;
    bool connected() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::string> labels_;
};

/// V(X) x V(Y) in row-major order; (a,b)~(a',b') iff one coordinate is
/// equal and the other adjacent. A = A_X (x) I + I (x) A_Y.
Graph cartesian_product(const Graph& x, const Graph& y);

/// Disjoint union plus all cross edges; X's vertices come first.
Graph join(const Graph& x, const Graph& y);

Graph complement(const Graph& x);

/// The unique bipartition of a connected graph with vertex 1 in the first
/// part, or nullopt if an odd cycle exists. Throws on disconnected input.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& x);

/// (nu,kappa,lambda,mu) iff common-neighbor counts are constant over each
/// vertex-pair class; complete and empty graphs are rejected (no mu class
/// or no lambda class to witness).
std::optional<SrgParams> recognize_srg(const Graph& x);

} // namespace gstwalk
