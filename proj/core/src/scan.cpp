#include "gstwalk/scan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>

#include "gstwalk/error.hpp"
#include "gstwalk/parallel.hpp"

namespace gstwalk {

namespace {

using Complex = std::complex<double>;

// |f(t)|^2 for f(t) = sum_r c_r exp(i theta_r t).
double entry_abs2(const std::vector<double>& theta, const std::vector<double>& coef,
                  double t) {
    Complex f = 0.0;
    for (std::size_t r = 0; r < theta.size(); ++r)
        f += coef[r] * std::polar(1.0, theta[r] * t);
    return std::norm(f);
}

// Golden-section minimization of g on [lo,hi] to time tolerance xtol.
double golden_min(const std::function<double(double)>& g, double lo, double hi,
                  double xtol = 1e-12) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = g(x2);
        }
    }
    // Return the best of the bracket ends and probes.
    double best = 0.5 * (a + b);
    double fb = g(best);
    for (double c : {a, b, x1, x2})
        if (g(c) < fb) {
            fb = g(c);
            best = c;
        }
    return best;
}

} // namespace

ScanResult entry_zero_scan(const Spectrum& spec, double from, double to,
                           double grid_step, double zero_tol) {
    if (grid_step <= 0) throw Error("grid_step must be positive");
    if (!(from < to)) throw Error("scan interval must satisfy from < to");
    if (zero_tol <= 0) throw Error("zero_tol must be positive");

    const int n = spec.n();
    const int d = spec.distinct_count();

    ScanResult result;
    result.from = from;
    result.to = to;
    result.grid_step = grid_step;
    result.zero_tol = zero_tol;

    const double spread = spec.eigenvalues.front() - spec.eigenvalues.back();
    if (spread * grid_step > 0.5)
        result.warnings.push_back(
            "grid step " + std::to_string(grid_step) + " is coarse for spectral spread " +
            std::to_string(spread) + "; zeros may be missed between grid points");
    result.warnings.push_back(
        "grid scan at step " + std::to_string(grid_step) +
        " cannot certify absence of zeros between grid points");

    // Closed grid: last point lands exactly on `to`.
    const std::size_t steps = static_cast<std::size_t>(std::ceil((to - from) / grid_step - 1e-12));
    std::vector<double> grid(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) grid[k] = from + static_cast<double>(k) * grid_step;
    grid.back() = to;

    // Shared phase table: phases[k*d + r] = exp(i theta_r t_k).
    std::vector<Complex> phases(grid.size() * d);
    parallel_chunks(grid.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            for (int r = 0; r < d; ++r)
                phases[k * d + r] = std::polar(1.0, spec.eigenvalues[r] * grid[k]);
    });

    // Unordered entry pairs (b <= a); U is symmetric.
    std::vector<std::pair<int, int>> entries;
    for (int b = 0; b < n; ++b)
        for (int a = b; a < n; ++a) entries.emplace_back(b, a);

    std::vector<std::vector<ZeroHit>> hits_per_entry(entries.size());
    std::vector<std::vector<ZeroHit>> borderline_per_entry(entries.size());
    std::vector<char> vanishing(entries.size(), 0);

    parallel_chunks(entries.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<double> coef(d), vals(grid.size());
        for (std::size_t e = lo; e < hi; ++e) {
            const auto [b, a] = entries[e];
            for (int r = 0; r < d; ++r) coef[r] = spec.projectors[r](b, a);

            double peak = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                Complex f = 0.0;
                for (int r = 0; r < d; ++r) f += coef[r] * phases[k * d + r];
                vals[k] = std::norm(f);
                peak = std::max(peak, vals[k]);
            }
            // identically-zero entry function (disconnected graph): every
            // time is a zero, nothing to bracket
            if (peak <= zero_tol * zero_tol) {
                vanishing[e] = 1;
                continue;
            }

            auto objective = [&](double t) { return entry_abs2(spec.eigenvalues, coef, t); };
            auto refine = [&](double lo_t, double hi_t) {
                const double t_star = golden_min(objective, lo_t, hi_t);
                const double residual = std::sqrt(objective(t_star));
                ZeroHit hit{b, a, t_star, residual};
                if (residual <= zero_tol) {
                    auto& bucket = hits_per_entry[e];
                    if (bucket.empty() || std::abs(bucket.back().time - t_star) > 1e-9)
                        bucket.push_back(hit);
                } else if (residual <= 10 * zero_tol) {
                    borderline_per_entry[e].push_back(hit);
                }
            };

            // Interior local minima plus the two boundary cells.
            if (grid.size() >= 2 && vals[0] < vals[1]) refine(grid[0], grid[1]);
            for (std::size_t k = 1; k + 1 < grid.size(); ++k)
                if (vals[k] < vals[k - 1] && vals[k] <= vals[k + 1])
                    refine(grid[k - 1], grid[k + 1]);
            if (grid.size() >= 2 && vals[grid.size() - 1] < vals[grid.size() - 2])
                refine(grid[grid.size() - 2], grid.back());
        }
    });

    for (std::size_t e = 0; e < entries.size(); ++e)
        if (vanishing[e])
            result.warnings.push_back(
                "entry (" + std::to_string(entries[e].first + 1) + "," +
                std::to_string(entries[e].second + 1) +
                ") vanishes on the whole grid (disconnected graph?); its zeros are "
                "not isolated and are not reported as hits");

    // Deterministic merge: both orientations of each off-diagonal entry.
    for (std::size_t e = 0; e < entries.size(); ++e) {
        for (const ZeroHit& h : hits_per_entry[e]) {
            result.hits.push_back(h);
            if (h.row != h.col) result.hits.push_back({h.col, h.row, h.time, h.refined_residual});
        }
        for (const ZeroHit& h : borderline_per_entry[e]) {
            result.borderline.push_back(h);
            if (h.row != h.col)
                result.borderline.push_back({h.col, h.row, h.time, h.refined_residual});
        }
    }
    auto order = [](const ZeroHit& x, const ZeroHit& y) {
        if (x.time != y.time) return x.time < y.time;
        if (x.row != y.row) return x.row < y.row;
        return x.col < y.col;
    };
    std::sort(result.hits.begin(), result.hits.end(), order);
    std::sort(result.borderline.begin(), result.borderline.end(), order);

    // Cluster hit times and classify each cluster.
    std::vector<double> times;
    for (const auto& h : result.hits) times.push_back(h.time);
    std::sort(times.begin(), times.end());
    std::vector<double> cluster_reps;
    for (std::size_t i = 0; i < times.size();) {
        std::size_t j = i;
        while (j + 1 < times.size() && times[j + 1] - times[j] <= 1e-9) ++j;
        cluster_reps.push_back(times[(i + j) / 2]);
        i = j + 1;
    }

    for (double t : cluster_reps) {
        const Eigen::MatrixXcd u = transition(spec, t);
        double max_off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) max_off = std::max(max_off, std::abs(u(i, j)));
        if (max_off <= zero_tol) {
            result.identity_times.push_back(t);
            continue;
        }
        // Closure atoms of singletons; bijective ones are the event pairs.
        std::vector<std::pair<VertexSet, VertexSet>> pairs;
        for (int a = 0; a < n; ++a) {
            VertexSet single(n);
            single.set(a);
            const VertexSet atom = closure(u, single, zero_tol);
            if (atom.count() == n) continue;  // trivial (V,V)
            const VertexSet image = forward_set(u, atom, zero_tol);
            if (image.count() != atom.count()) continue;
            if (std::find(pairs.begin(), pairs.end(), std::make_pair(atom, image)) ==
                pairs.end())
                pairs.emplace_back(atom, image);
        }
        if (!pairs.empty()) {
            std::sort(pairs.begin(), pairs.end());
            result.gst_events.push_back({t, std::move(pairs)});
        }
    }
    return result;
}

bool isolation_check(const Spectrum& spec, const Graph& x, const ZeroHit& hit,
                     double delta, double zero_tol) {
    if (!x.connected())
        throw Error("isolation_check requires a connected graph");
    const int d = spec.distinct_count();
    std::vector<double> coef(d);
    for (int r = 0; r < d; ++r) coef[r] = spec.projectors[r](hit.row, hit.col);

    const double lo = 1e-6;
    for (int j = 0; j < 5; ++j) {
        const double step = lo * std::pow(delta / lo, j / 4.0);
        for (double t : {hit.time - step, hit.time + step})
            if (std::sqrt(entry_abs2(spec.eigenvalues, coef, t)) <= zero_tol) return false;
    }
    return true;
}

namespace {

// Best rational p/q ~= x with q <= maxden (continued fractions).
std::optional<std::pair<long, long>> rational_fit(double x, long maxden, double tol) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        const long a = static_cast<long>(fl);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = v - fl;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    if (std::abs(x - static_cast<double>(p1) / q1) > tol) return std::nullopt;
    return std::make_pair(p1, q1);
}

double gst_residual(const Spectrum& spec, const VertexSet& s, const VertexSet& t,
                    double time, double zero_tol) {
    return has_gst(spec, s, t, time, zero_tol).residual;
}

} // namespace

std::vector<CandidateTime> bipartite_times(const Graph& x, const Spectrum& spec,
                                           long denominator_bound, double zero_tol) {
    auto parts = bipartition(x);
    if (!parts) throw Error("bipartite_times requires a bipartite graph");
    const auto& [v0, v1] = *parts;

    double theta_plus = 0.0;
    for (double th : spec.eigenvalues)
        if (th > 1e-12 && (theta_plus == 0.0 || th < theta_plus)) theta_plus = th;
    if (theta_plus == 0.0) return {};

    std::vector<long> nums, dens;
    for (double th : spec.eigenvalues) {
        auto fit = rational_fit(th / theta_plus, denominator_bound, 1e-9);
        if (!fit) return {};  // no rational structure within the bound
        nums.push_back(fit->first);
        dens.push_back(fit->second);
    }
    long lcm = 1;
    for (long q : dens) lcm = std::lcm(lcm, q);
    std::vector<long> ints;
    long g = 0;
    for (std::size_t r = 0; r < nums.size(); ++r) {
        const long m = nums[r] * (lcm / dens[r]);
        ints.push_back(m);
        g = std::gcd(g, std::abs(m));
    }
    if (g == 0) return {};

    std::vector<CandidateTime> out;
    auto push_validated = [&](const std::string& desc, double tau, const VertexSet& s,
                              const VertexSet& t) {
        const double res = gst_residual(spec, s, t, tau, zero_tol);
        if (res <= zero_tol) out.push_back({desc, tau, s, t, res});
    };

    for (int k = 1; k <= 2; ++k) {
        const double alpha = k * static_cast<double>(lcm) / (g * theta_plus);
        const std::string a_str = "alpha=" + std::to_string(alpha);
        push_validated("bipartite case (a) (V0,V0), " + a_str, M_PI * alpha, v0, v0);
        push_validated("bipartite case (a) (V1,V1), " + a_str, M_PI * alpha, v1, v1);
        bool all_odd = true;
        for (long m : ints)
            if ((k * (m / g)) % 2 == 0) all_odd = false;
        if (all_odd) {
            push_validated("bipartite case (b) (V0,V1), " + a_str, M_PI * alpha / 2, v0, v1);
            push_validated("bipartite case (b) (V1,V0), " + a_str, M_PI * alpha / 2, v1, v0);
        }
    }
    return out;
}

std::vector<double> join_times(long k1, long m1, long k2, long m2, int count) {
    // Gap between the two join-specific eigenvalues, the roots of
    // (x-k1)(x-k2) = m1*m2. The variant with k1+k2 under the radical fails
    // on K3 = K1 + K2; every candidate is validated numerically anyway.
    const double d = static_cast<double>((k1 - k2) * (k1 - k2) + 4 * m1 * m2);
    std::vector<double> out;
    for (int l = 1; l <= count; ++l) out.push_back(2.0 * l * M_PI / std::sqrt(d));
    return out;
}

std::vector<CandidateTime> validated_join_times(const Graph& x1, const Graph& x2,
                                                int count, double zero_tol) {
    auto regular_degree = [](const Graph& g) {
        const int k = g.degree(0);
        for (int v = 1; v < g.n(); ++v)
            if (g.degree(v) != k) throw Error("join_times requires regular factors");
        return k;
    };
    const long k1 = regular_degree(x1), k2 = regular_degree(x2);
    const Graph joined = join(x1, x2);
    const Spectrum spec = decompose(joined);

    VertexSet part1(joined.n()), part2(joined.n());
    for (int v = 0; v < x1.n(); ++v) part1.set(v);
    for (int v = 0; v < x2.n(); ++v) part2.set(x1.n() + v);

    std::vector<CandidateTime> out;
    int l = 0;
    for (double tau : join_times(k1, x1.n(), k2, x2.n(), count)) {
        ++l;
        for (const auto& [name, part] :
             {std::make_pair(std::string("V(X1)"), part1), std::make_pair(std::string("V(X2)"), part2)}) {
            const double res = gst_residual(spec, part, part, tau, zero_tol);
            if (res <= zero_tol)
                out.push_back({"join (" + name + "," + name + ") at 2*" + std::to_string(l) +
                                   "*pi/sqrt(D)",
                               tau, part, part, res});
        }
    }
    return out;
}

DoubleStarWitness double_star_time(int k) {
    if (k < 1) throw Error("double star parameter k must be >= 1");
    DoubleStarWitness w{make_double_star(k), 2.0 * M_PI / std::sqrt(4.0 * k + 1.0),
                        VertexSet(2 * k + 2, {0, 1})};
    return w;
}

SrgCandidates srg_times(const SrgParams& p, const Graph* realization,
                        long conference_bound, double zero_tol) {
    if (!p.feasible()) throw Error("infeasible srg parameter set (identity violated)");
    SrgCandidates out;

    const double delta = static_cast<double>((p.mu - p.lambda) * (p.mu - p.lambda) +
                                             4 * (p.kappa - p.mu));
    const double sq = std::sqrt(delta);
    const double theta1 = 0.5 * (p.lambda - p.mu + sq);
    const double theta2 = 0.5 * (p.lambda - p.mu - sq);

    std::optional<Spectrum> spec;
    if (realization) spec = decompose(*realization);

    auto push = [&](const std::string& desc, double tau, const VertexSet& s,
                    const VertexSet& t) {
        CandidateTime c{desc, tau, s, t, 0.0};
        if (spec) {
            c.residual = gst_residual(*spec, s, t, tau, zero_tol);
            if (c.residual > zero_tol) {
                out.notes.push_back("dropped candidate '" + desc + "' at t=" +
                                    std::to_string(tau) + ": residual " +
                                    std::to_string(c.residual));
                return;
            }
        }
        out.times.push_back(std::move(c));
    };

    // (a) integer eigenvalues with a common divisor D >= 2: U(2*l*pi/D) = I.
    const bool integral = std::abs(theta1 - std::round(theta1)) < 1e-9 &&
                          std::abs(theta2 - std::round(theta2)) < 1e-9;
    if (integral) {
        long d = std::gcd(p.kappa, std::gcd(static_cast<long>(std::llround(std::abs(theta1))),
                                            static_cast<long>(std::llround(std::abs(theta2)))));
        if (d >= 2) {
            const int nverts = realization ? realization->n() : static_cast<int>(p.nu);
            for (long l = 1; l < d; ++l)
                push("srg case (a): all subsets periodic (U = I), l=" + std::to_string(l),
                     2.0 * M_PI * l / d, VertexSet::full(nverts), VertexSet::full(nverts));
        }
    }

    // (b) complete multipartite (n, n-m, n-2m, n-m), n/m > 2: tau = 2*pi*l/m,
    // targets ({b}, V \ X(b)).
    const long m = p.nu - p.kappa;
    if (p.mu == p.kappa && p.lambda == 2 * p.kappa - p.nu && p.nu % m == 0 && p.nu / m > 2) {
        for (long l = 1; l <= 3; ++l) {
            const double tau = 2.0 * M_PI * l / m;
            if (realization && spec) {
                for (int b = 0; b < realization->n(); ++b) {
                    VertexSet s(realization->n());
                    s.set(b);
                    push("srg case (b): ({" + std::to_string(b + 1) + "}, V\\X(b)), l=" +
                             std::to_string(l),
                         tau, s, realization->neighborhood(b).complement());
                }
            } else {
                const int nverts = static_cast<int>(p.nu);
                out.times.push_back({"srg case (b): ({b}, V\\X(b)) for every b, l=" +
                                         std::to_string(l),
                                     tau, VertexSet(nverts), VertexSet(nverts), 0.0});
            }
        }
    }

    // (c) complete bipartite (2m, m, 0, m): tau = pi/D for divisors D of kappa.
    if (p.nu == 2 * p.kappa && p.lambda == 0 && p.mu == p.kappa) {
        for (long dvs = 1; dvs <= p.kappa; ++dvs) {
            if (p.kappa % dvs != 0) continue;
            const double tau = M_PI / dvs;
            if (realization && spec) {
                auto parts = bipartition(*realization);
                if (parts)
                    for (const auto& part : {parts->first, parts->second})
                        push("srg case (c): part periodic, D=" + std::to_string(dvs), tau,
                             part, part);
            } else {
                const int nverts = static_cast<int>(p.nu);
                out.times.push_back({"srg case (c): bipartition parts periodic, D=" +
                                         std::to_string(dvs),
                                     tau, VertexSet(nverts), VertexSet(nverts), 0.0});
            }
        }
    }

    // (d) conference parameters (4m+1, 2m, m-1, m): integer sweep of the
    // cosine condition, reported as solutions-or-absence up to the bound.
    if (p.nu == 4 * p.mu + 1 && p.kappa == 2 * p.mu && p.lambda == p.mu - 1) {
        ConferenceSweep sweep;
        sweep.bound = conference_bound;
        const double target = -1.0 / (4.0 * static_cast<double>(p.mu));
        const double inv_sqrt_nu = 1.0 / std::sqrt(static_cast<double>(p.nu));
        sweep.best_residual = 1e300;
        for (long b = 1; b <= conference_bound; ++b) {
            const double r = std::abs(std::cos(M_PI * b * inv_sqrt_nu) - target);
            if (r < sweep.best_residual) {
                sweep.best_residual = r;
                sweep.best_b = b;
            }
            if (r < 1e-9) sweep.solutions.push_back(b);
        }
        out.conference = sweep;
        if (sweep.solutions.empty())
            out.notes.push_back("srg case (d): no integer B <= " +
                                std::to_string(conference_bound) +
                                " satisfies cos(pi*B/sqrt(nu)) = -1/(4m); reported as "
                                "absence up to the bound, not nonexistence");
    }
    return out;
}

MonogamyAudit monogamy_audit(const ScanResult& result) {
    std::map<VertexSet, std::vector<VertexSet>> by_source;
    for (const auto& event : result.gst_events)
        for (const auto& [s, t] : event.pairs) {
            auto& targets = by_source[s];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
    MonogamyAudit audit;
    for (auto& [s, targets] : by_source) {
        MonogamyEntry entry{s, targets, false};
        int differing = 0;
        for (const auto& t : targets)
            if (t != s) ++differing;
        entry.violation = differing > 1;
        if (entry.violation) ++audit.violations;
        audit.entries.push_back(std::move(entry));
    }
    return audit;
}

} // namespace gstwalk
