#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gstwalk/graph.hpp"

namespace gstwalk {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    complete_multipartite,
    hypercube,
    double_star,
    mckay,
    paley,
    petersen,
    edge_list,
    // composite nodes
    product,
    join,
    complement,
};

std::string family_name(Family f);

/// Generator expression tree. Leaves carry family-specific integer
/// parameters (or explicit edges for edge_list); composite nodes carry
/// children.
struct GeneratorSpec {
    Family family = Family::path;
    std::vector<long> params;
    std::vector<GeneratorSpec> children;
    // edge_list payload
    int n = 0;
    std::vector<std::pair<int, int>> edge_pairs; // 0-indexed

    bool operator==(const GeneratorSpec&) const = default;
};

/// Builds the canonical labeled graph. Throws Error naming the violated
/// constraint on invalid parameters.
Graph build(const GeneratorSpec& spec);

// Named generators (vertex numbering is the canonical one used throughout).
Graph make_path(int k);
Graph make_cycle(int k);
Graph make_complete(int k);
Graph make_complete_bipartite(int a, int b);
Graph make_complete_multipartite(int parts, int part_size);
Graph make_hypercube(int dim);
/// Symmetric double star S_{k,k}: centers 1,2 adjacent, k leaves each.
Graph make_double_star(int k);
/// Theta graph on 8 vertices: hubs 3 and 6 joined by the three disjoint
/// paths 3-4-5-6, 3-1-7-6 and 3-2-8-6. Eigenvalues (+-1+-sqrt(13))/2, +-1;
/// the hub pair {3,6} is periodic at 2*pi/sqrt(13).
Graph make_mckay();
/// Quadratic-residue graph on a prime q = 1 (mod 4).
Graph make_paley(long q);
/// Kneser(5,2) on the lexicographically ordered 2-subsets of {1..5}.
Graph make_petersen();

} // namespace gstwalk
