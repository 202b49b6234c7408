#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gstwalk/graph.hpp"

namespace gstwalk {

/// Spectral decomposition of an adjacency matrix into distinct eigenvalues
/// (strictly descending) and orthogonal eigenprojectors. Immutable after
/// decompose(); every consumer below is a pure function of it.
struct Spectrum {
    std::vector<double> eigenvalues;          // theta_0 > ... > theta_d
    std::vector<Eigen::MatrixXd> projectors;  // E_r, symmetric, sum to I
    std::vector<int> multiplicities;
    double eigen_tol = 0.0;

    int n() const { return projectors.empty() ? 0 : static_cast<int>(projectors[0].rows()); }
    int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
};

/// Max deviations of the three Spectrum invariants.
struct SpectrumDiagnostics {
    double sum_to_identity = 0.0;   // || sum E_r - I ||_max
    double orthogonality = 0.0;     // max_rs || E_r E_s - delta_rs E_r ||_max
    double reconstruction = 0.0;    // || sum theta_r E_r - A ||_max
};

/// Eigenvalues of A grouped into clusters cut at gaps >= eigen_tol; each
/// projector is assembled from an orthonormal eigenbasis of its cluster.
/// eigen_tol <= 0 selects the default 1e-8 * max(1, spectral radius bound).
/// Throws on ambiguous clustering (a cut gap below 2*eigen_tol adjacent to
/// another gap below 2*eigen_tol).
Spectrum decompose(const Graph& x, double eigen_tol = 0.0);

/// U(t) = sum_r exp(i t theta_r) E_r.
Eigen::MatrixXcd transition(const Spectrum& spec, double t);

/// (h0(t), h1(t), h2(t)) for a connected non-complete strongly regular
/// graph; e_a^T U(t) e_b = h_delta(t)/nu with delta the distance from a
/// to b. Throws if the multiplicities f,g are non-integral away from the
/// conference case f = g.
std::array<std::complex<double>, 3> srg_h(const SrgParams& params, double t);

SpectrumDiagnostics verify_spectrum(const Spectrum& spec, const Graph& x);

} // namespace gstwalk
