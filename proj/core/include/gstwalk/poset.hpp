#pragma once

#include <utility>
#include <vector>

#include "gstwalk/gst.hpp"
#include "gstwalk/spectrum.hpp"
#include "gstwalk/vertex_set.hpp"

namespace gstwalk {

/// Per-vertex forward images at a fixed time; F(S,t) is the union of
/// singleton_images over S (union-additivity of F).
struct MaximalPairMap {
    double time = 0.0;
    double zero_tol = kDefaultZeroTol;
    std::vector<VertexSet> singleton_images;

    VertexSet forward(const VertexSet& s) const;
};

MaximalPairMap maximal_pairs(const Spectrum& spec, double t,
                             double zero_tol = kDefaultZeroTol);

/// Is (S, F(S,t)) maximal with no strict superset S' with F(S') inside T?
bool is_maximal_pair(const MaximalPairMap& map, const VertexSet& s, const VertexSet& t);

/// All GST pairs (S,T) at time t, enumerated over the 4^n pairs.
/// Throws for n > 5; use maximal_pairs beyond that.
std::vector<std::pair<VertexSet, VertexSet>> st_poset(const Spectrum& spec, double t,
                                                      double zero_tol = kDefaultZeroTol);

/// All S with F(S,t) = S. Computed from the condensation of the
/// singleton-image relation (out-closed sets), not by 2^n enumeration.
/// Output in increasing bit-mask order.
std::vector<VertexSet> periodic_sets(const Spectrum& spec, double t, int n_cap = 16,
                                     double zero_tol = kDefaultZeroTol);

struct TopologyAtTime {
    double time = 0.0;
    std::vector<VertexSet> closed_sets;  // Cl_t(S) = S, bit-mask order
    std::vector<VertexSet> open_sets;    // complements of closed sets
};

/// Enumerates t-closed sets over all 2^n subsets (n <= n_cap).
TopologyAtTime topology_at(const Spectrum& spec, double t, int n_cap = 16,
                           double zero_tol = kDefaultZeroTol);

/// Checks empty/full membership and closure of the closed-set family
/// under pairwise union and intersection.
bool verify_topology_axioms(const TopologyAtTime& topo);

/// t-closed sets S with |F(S,t)| > |S| (closed but not witnessed by
/// bijective GST); an empty list is consistent with the open problem.
std::vector<VertexSet> closed_vs_bijective_report(const Spectrum& spec, double t,
                                                  int n_cap = 16,
                                                  double zero_tol = kDefaultZeroTol);

} // namespace gstwalk
