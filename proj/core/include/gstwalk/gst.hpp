#pragma once

#include <string>
#include <vector>

#include "gstwalk/spectrum.hpp"
#include "gstwalk/vertex_set.hpp"

namespace gstwalk {

constexpr double kDefaultZeroTol = 1e-9;

struct GSTFlags {
    bool trivial = false;
    bool maximal = false;
    bool bijective = false;
    bool periodic = false;
    bool pst = false;
    bool fractional_revival = false;
    bool proper_fractional_revival = false;

    std::vector<std::string> names() const;
    bool operator==(const GSTFlags&) const = default;
};

/// Verdict for (S,T)-group state transfer at one time.
/// holds  <=>  F(S,t) subset of T  <=>  residual <= zero_tol.
struct GSTReport {
    VertexSet source;
    VertexSet target;
    double time = 0.0;
    double zero_tol = kDefaultZeroTol;
    bool holds = false;
    double residual = 0.0;         // max |U(t)_{b,a}|, a in S, b not in T
    GSTFlags classification;
    VertexSet forward_image;       // F(S,t)
    int borderline_entries = 0;    // |entries| in (zero_tol, 10*zero_tol]
};

/// F(S,t): union of the supports of the U(t)-images of basis states on S.
VertexSet forward_set(const Spectrum& spec, const VertexSet& s, double t,
                      double zero_tol = kDefaultZeroTol);

/// I(S,t) = {a | e_a in U(t)<S>}, computed as {a | F({a},-t) subset of S}.
VertexSet inverse_set(const Spectrum& spec, const VertexSet& s, double t,
                      double zero_tol = kDefaultZeroTol);

/// t-closure Cl_t(S) = I(F(S,t),-t) = {a | F({a},t) subset of F(S,t)}.
VertexSet closure(const Spectrum& spec, const VertexSet& s, double t,
                  double zero_tol = kDefaultZeroTol);

GSTReport has_gst(const Spectrum& spec, const VertexSet& s, const VertexSet& t,
                  double time, double zero_tol = kDefaultZeroTol);

/// Lemma basics (g): the complement pair (V\T, V\S) at the same time.
GSTReport complement_transfer(const Spectrum& spec, const VertexSet& s,
                              const VertexSet& t, double time,
                              double zero_tol = kDefaultZeroTol);

// Overloads on a precomputed transition matrix (scan/poset reuse).
VertexSet forward_set(const Eigen::MatrixXcd& u, const VertexSet& s, double zero_tol);
VertexSet closure(const Eigen::MatrixXcd& u, const VertexSet& s, double zero_tol);

/// One clause of the equal-cardinality structure theorem.
struct StructureClause {
    std::string name;      // e.g. "(T,S)-GST at t"
    bool holds = false;
    double residual = 0.0;
};

struct EqualCardReport {
    std::vector<StructureClause> clauses;  // (a)..(f)
    bool all_hold = false;
};

/// Verifies the six consequences of bijective (S,T)-GST: (a) (T,S) at t,
/// (b) (S\I,T\I), (c) (T\I,S\I), (d) I periodic at t, (e) S and T periodic
/// at 2t, (f) V\(S u T) periodic at t. Precondition: has_gst(S,T,t) holds
/// and |S| = |T|; throws otherwise.
EqualCardReport equal_card_structure(const Spectrum& spec, const VertexSet& s,
                                     const VertexSet& t, double time,
                                     double zero_tol = kDefaultZeroTol);

struct ParallelCheck {
    std::vector<bool> equal_span;     // per distinct eigenvalue
    std::vector<double> deviations;   // || P_S - P_T ||_max per eigenvalue
    bool all_equal = false;
};

/// For each eigenprojector E_r, decides whether span{E_r e_a | a in S}
/// equals span{E_r e_a | a in T}, by comparing the orthogonal projectors
/// onto the two column families. Requires |S| = |T|.
ParallelCheck parallel_check(const Spectrum& spec, const VertexSet& s,
                             const VertexSet& t, double tol = 1e-8);

} // namespace gstwalk
