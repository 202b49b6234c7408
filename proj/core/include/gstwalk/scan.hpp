#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstwalk/generators.hpp"
#include "gstwalk/gst.hpp"
#include "gstwalk/spectrum.hpp"

namespace gstwalk {

/// Refined zero of one entry function f(t) = U(t)_{row,col}.
struct ZeroHit {
    int row = 0;  // 0-indexed
    int col = 0;
    double time = 0.0;
    double refined_residual = 0.0;  // |f| at the refined minimum
};

/// Nontrivial bijective transfer detected at one time: the distinct
/// closure atoms S with |F(S,t)| = |S|, paired with their images.
struct GstEvent {
    double time = 0.0;
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
};

struct ScanResult {
    double from = 0.0;
    double to = 0.0;
    double grid_step = 0.0;
    double zero_tol = kDefaultZeroTol;
    std::vector<ZeroHit> hits;
    std::vector<GstEvent> gst_events;
    /// Times where U(t) is a scalar multiple of I (every subset periodic;
    /// nothing has moved). Kept apart from gst_events.
    std::vector<double> identity_times;
    std::vector<ZeroHit> borderline;  // refined minima in (zero_tol, 10*zero_tol]
    std::vector<std::string> warnings;
};

/// Sweeps |U(t)_{b,a}|^2 for every entry over the closed interval,
/// brackets local minima, refines each by golden-section search to time
/// tolerance 1e-12, and keeps refined minima at or below zero_tol.
/// Entry pairs are scanned concurrently; the merge is deterministic.
ScanResult entry_zero_scan(const Spectrum& spec, double from, double to,
                           double grid_step = 1e-3, double zero_tol = kDefaultZeroTol);

/// True iff |f| stays above zero_tol at hit.time +- delta_j for five
/// geometric steps delta_j from 1e-6 up to delta. Requires a connected
/// graph (the finitely-many-zeros lemma needs it).
bool isolation_check(const Spectrum& spec, const Graph& x, const ZeroHit& hit,
                     double delta = 1e-4, double zero_tol = kDefaultZeroTol);

/// One closed-form candidate transfer time, numerically validated.
struct CandidateTime {
    std::string description;
    double time = 0.0;
    VertexSet source;
    VertexSet target;
    double residual = 0.0;
};

/// Rational-spectrum candidates for a connected bipartite graph: if some
/// alpha makes all alpha*theta_r integers, (V0,V0) and (V1,V1) at pi*alpha;
/// if all odd, additionally (V0,V1) and (V1,V0) at pi*alpha/2. Returns an
/// empty list when no rational structure is found within denominator_bound.
std::vector<CandidateTime> bipartite_times(const Graph& x, const Spectrum& spec,
                                           long denominator_bound = 64,
                                           double zero_tol = kDefaultZeroTol);

/// tau_l = 2*l*pi/sqrt((k1-k2)^2 + 4*m1*m2) for l = 1..count (formula only).
std::vector<double> join_times(long k1, long m1, long k2, long m2, int count = 3);

/// Builds the join of two regular graphs and validates the join_times
/// candidates on it: (V(X1),V(X1)) and (V(X2),V(X2)) at each tau_l.
/// Throws if either factor is non-regular.
std::vector<CandidateTime> validated_join_times(const Graph& x1, const Graph& x2,
                                                int count = 3,
                                                double zero_tol = kDefaultZeroTol);

struct DoubleStarWitness {
    Graph graph;
    double time = 0.0;   // 2*pi/sqrt(4k+1)
    VertexSet centers;   // {1,2}
};

DoubleStarWitness double_star_time(int k);

struct ConferenceSweep {
    long bound = 0;
    std::vector<long> solutions;    // B with |cos(pi*B/sqrt(nu)) + 1/(4m)| < 1e-9
    long best_b = 0;
    double best_residual = 0.0;
};

struct SrgCandidates {
    std::vector<CandidateTime> times;           // cases (a)-(c), validated when a graph is given
    std::optional<ConferenceSweep> conference;  // case (d)
    std::vector<std::string> notes;
};

/// Candidate times per the strongly-regular case analysis. When a graph
/// realizing the parameters is supplied, candidates are validated on it
/// (invalid ones are dropped with a note); otherwise times are emitted
/// with residual unset.
SrgCandidates srg_times(const SrgParams& params, const Graph* realization = nullptr,
                        long conference_bound = 100000,
                        double zero_tol = kDefaultZeroTol);

struct MonogamyEntry {
    VertexSet source;
    std::vector<VertexSet> targets;  // distinct targets across all event times
    bool violation = false;          // more than one target differing from source
};

struct MonogamyAudit {
    std::vector<MonogamyEntry> entries;
    int violations = 0;
};

/// Audits the bijective-GST events of a scan against monogamy: each source
/// may have at most one partner besides itself across all times.
MonogamyAudit monogamy_audit(const ScanResult& result);

} // namespace gstwalk
