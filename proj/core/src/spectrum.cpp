#include "gstwalk/spectrum.hpp"

#include <cmath>

#include "gstwalk/error.hpp"

namespace gstwalk {

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

Spectrum decompose(const Graph& x, double eigen_tol) {
    const int n = x.n();
    Eigen::MatrixXd a = x.adjacency_matrix();
    if (eigen_tol <= 0.0) {
        // Gershgorin bound (max degree) as the spectral radius estimate.
        double rho = 0.0;
        for (int v = 0; v < n; ++v) rho = std::max(rho, static_cast<double>(x.degree(v)));
        eigen_tol = 1e-8 * std::max(1.0, rho);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed to converge");
    const Eigen::VectorXd w = solver.eigenvalues();   // ascending
    const Eigen::MatrixXd v = solver.eigenvectors();  // orthonormal columns

    // Ambiguity diagnostic: a cut in the uncertain band next to another
    // small gap means the clustering depends delicately on eigen_tol.
    for (int i = 0; i + 2 < n; ++i) {
        double g1 = w(i + 1) - w(i);
        double g2 = w(i + 2) - w(i + 1);
        bool cut = g1 >= eigen_tol || g2 >= eigen_tol;
        if (cut && g1 < 2 * eigen_tol && g2 < 2 * eigen_tol)
            throw Error("ambiguous eigenvalue clustering near " + std::to_string(w(i + 1)) +
                        ": adjacent gaps " + std::to_string(g1) + ", " + std::to_string(g2) +
                        " both inside 2*eigen_tol band; retry with a different --eigen-tol");
    }

    Spectrum spec;
    spec.eigen_tol = eigen_tol;
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && w(j + 1) - w(j) < eigen_tol) ++j;
        const int mult = j - i + 1;
        const auto block = v.middleCols(i, mult);
        spec.eigenvalues.push_back(w.segment(i, mult).mean());
        spec.projectors.push_back(block * block.transpose());
        spec.multiplicities.push_back(mult);
        i = j + 1;
    }
    // Descending distinct eigenvalues.
    std::reverse(spec.eigenvalues.begin(), spec.eigenvalues.end());
    std::reverse(spec.projectors.begin(), spec.projectors.end());
    std::reverse(spec.multiplicities.begin(), spec.multiplicities.end());
    return spec;
}

Eigen::MatrixXcd transition(const Spectrum& spec, double t) {
    const int n = spec.n();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < spec.distinct_count(); ++r)
        u += std::polar(1.0, t * spec.eigenvalues[r]) * spec.projectors[r];
    return u;
}

std::array<std::complex<double>, 3> srg_h(const SrgParams& p, double t) {
    if (!p.feasible()) throw Error("infeasible srg parameter set (identity violated)");
    if (p.kappa >= p.nu - 1) throw Error("srg_h requires a non-complete graph (kappa < nu-1)");
    if (p.mu == 0) throw Error("srg_h requires a connected graph (mu > 0)");

    const double nu = static_cast<double>(p.nu);
    const double kappa = static_cast<double>(p.kappa);
    const double lambda = static_cast<double>(p.lambda);
    const double mu = static_cast<double>(p.mu);

    const double delta = (mu - lambda) * (mu - lambda) + 4.0 * (kappa - mu);
    const double sq = std::sqrt(delta);
    const double theta1 = 0.5 * (lambda - mu + sq);
    const double theta2 = 0.5 * (lambda - mu - sq);
    const double f = 0.5 * (nu - 1.0 + ((nu - 1.0) * (mu - lambda) - 2.0 * kappa) / sq);
    const double g = 0.5 * (nu - 1.0 - ((nu - 1.0) * (mu - lambda) - 2.0 * kappa) / sq);

    const bool conference = std::abs(f - g) < 1e-9;
    if (!conference &&
        (std::abs(f - std::round(f)) > 1e-6 || std::abs(g - std::round(g)) > 1e-6))
        throw Error("infeasible srg parameter set: multiplicities f,g non-integral");

    const std::complex<double> e0 = std::polar(1.0, kappa * t);
    const std::complex<double> e1 = std::polar(1.0, theta1 * t);
    const std::complex<double> e2 = std::polar(1.0, theta2 * t);

    std::array<std::complex<double>, 3> h;
    h[0] = e0 + f * e1 + g * e2;
    h[1] = e0 + (f * theta1 / kappa) * e1 + (g * theta2 / kappa) * e2;
    h[2] = e0 + (f * (1.0 + theta1) / (kappa + 1.0 - nu)) * e1 +
           (g * (1.0 + theta2) / (kappa + 1.0 - nu)) * e2;
    return h;
}

SpectrumDiagnostics verify_spectrum(const Spectrum& spec, const Graph& x) {
    const int n = spec.n();
    SpectrumDiagnostics d;

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < spec.distinct_count(); ++r) {
        sum += spec.projectors[r];
        recon += spec.eigenvalues[r] * spec.projectors[r];
    }
    d.sum_to_identity = max_abs(sum - Eigen::MatrixXd::Identity(n, n));
    d.reconstruction = max_abs(recon - x.adjacency_matrix());

    for (int r = 0; r < spec.distinct_count(); ++r)
        for (int s = 0; s < spec.distinct_count(); ++s) {
            Eigen::MatrixXd prod = spec.projectors[r] * spec.projectors[s];
            if (r == s) prod -= spec.projectors[r];
            d.orthogonality = std::max(d.orthogonality, max_abs(prod));
        }
    return d;
}

} // namespace gstwalk
