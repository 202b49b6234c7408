#include "gstwalk/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "gstwalk/error.hpp"

namespace gstwalk {

namespace {

std::string canonical(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    mpq_class v(s);
    v.canonicalize();
    return v;
}

// Internal dense rational matrix.
struct Mat {
    int n = 0;
    std::vector<mpq_class> a;

    explicit Mat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}
    mpq_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    static Mat identity(int dim) {
        Mat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }
    Mat mul(const Mat& o) const {
        Mat out(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const mpq_class& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (o.at(k, j) != 0) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }
    bool is_zero() const {
        for (const auto& v : a)
            if (v != 0) return false;
        return true;
    }
};

Mat adjacency_minus(const Graph& x, long theta) {
    Mat m(x.n());
    for (int i = 0; i < x.n(); ++i) {
        for (int j = 0; j < x.n(); ++j)
            if (x.adjacent(i, j)) m.at(i, j) = 1;
        m.at(i, i) -= theta;
    }
    return m;
}

RationalMatrix to_public(const Mat& m) {
    RationalMatrix out(m.n, m.n);
    out.flat.clear();
    out.flat.reserve(m.a.size());
    for (const auto& v : m.a) out.flat.push_back(canonical(v));
    return out;
}

Mat from_public(const RationalMatrix& m) {
    Mat out(m.rows());
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = parse_rational(m.flat.at(i));
    return out;
}

// Ascending-degree integer polynomials.
using Poly = std::vector<mpz_class>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials (remainder must vanish).
Poly divide_exact(const Poly& num, const Poly& den) {
    Poly rem = num, quot(num.size(), 0);
    strip(rem);
    const std::size_t dd = den.size() - 1;
    while (rem.size() >= den.size()) {
        const std::size_t shift = rem.size() - den.size();
        mpz_class c = rem.back() / den.back();
        quot[shift] = c;
        for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= c * den[i];
        strip(rem);
    }
    if (!rem.empty()) throw Error("internal: non-exact cyclotomic division");
    strip(quot);
    return quot;
}

const Poly& cyclotomic_mpz(long q) {
    static std::map<long, Poly> cache;
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;

    Poly phi;
    if (q == 1) {
        phi = {-1, 1};  // X - 1
    } else {
        Poly xq(q + 1, 0);
        xq[0] = -1;
        xq[q] = 1;  // X^q - 1
        for (long d = 1; d < q; ++d)
            if (q % d == 0) xq = divide_exact(xq, cyclotomic_mpz(d));
        phi = xq;
    }
    return cache.emplace(q, std::move(phi)).first->second;
}

} // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : flat(static_cast<std::size_t>(rows) * cols, "0/1"), rows_(rows), cols_(cols) {}

std::string RationalMatrix::entry(int r, int c) const {
    return flat[static_cast<std::size_t>(r) * cols_ + c];
}

std::uint64_t graph_hash(const Graph& x) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(x.n()));
    for (auto [a, b] : x.edges()) {
        mix(static_cast<std::uint64_t>(a));
        mix(static_cast<std::uint64_t>(b));
    }
    return h;
}

std::vector<std::pair<long, RationalMatrix>> rational_projectors(const Graph& x) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x.adjacency_matrix());
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed to converge");

    std::vector<long> thetas;
    for (int i = 0; i < x.n(); ++i) {
        const double w = solver.eigenvalues()(i);
        const double rounded = std::round(w);
        if (std::abs(w - rounded) > 1e-6)
            throw Error("non-integer spectrum: eigenvalue " + std::to_string(w) +
                        " is not within 1e-6 of an integer");
        const long t = static_cast<long>(rounded);
        if (thetas.empty() || thetas.back() != t) thetas.push_back(t);
    }
    std::sort(thetas.rbegin(), thetas.rend());

    // Exact confirmation that the candidate integers are the spectrum.
    Mat annihilator = Mat::identity(x.n());
    for (long t : thetas) annihilator = annihilator.mul(adjacency_minus(x, t));
    if (!annihilator.is_zero())
        throw Error("annihilation check failed: rounded integer spectrum is wrong");

    std::vector<std::pair<long, RationalMatrix>> projs;
    for (long theta_r : thetas) {
        Mat e = Mat::identity(x.n());
        mpq_class denom = 1;
        for (long theta_s : thetas) {
            if (theta_s == theta_r) continue;
            e = e.mul(adjacency_minus(x, theta_s));
            denom *= mpq_class(theta_r - theta_s);
        }
        for (auto& v : e.a) v /= denom;
        projs.emplace_back(theta_r, to_public(e));
    }
    return projs;
}

CyclotomicNumber entry_at_rational_time(
    const std::vector<std::pair<long, RationalMatrix>>& projectors, int a, int b,
    long p, long q) {
    if (q < 1) throw Error("cyclotomic order q must be >= 1");
    CyclotomicNumber x;
    x.order = q;
    std::vector<mpq_class> coeffs(q, 0);
    for (const auto& [theta, e] : projectors) {
        const long exponent = ((p % q) * (theta % q) % q + q) % q;
        coeffs[exponent] += parse_rational(e.entry(b, a));
    }
    x.coeffs.reserve(q);
    for (const auto& c : coeffs) x.coeffs.push_back({canonical(c)});
    return x;
}

bool is_zero(const CyclotomicNumber& x) {
    const Poly& phi = cyclotomic_mpz(x.order);
    // Remainder of the (rational) coefficient polynomial modulo the monic
    // integer polynomial phi_q; zero remainder <=> zero in Q(zeta_q).
    std::vector<mpq_class> rem;
    rem.reserve(x.coeffs.size());
    for (const auto& c : x.coeffs) rem.push_back(parse_rational(c.value));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    while (rem.size() >= phi.size()) {
        const std::size_t shift = rem.size() - phi.size();
        const mpq_class c = rem.back();  // phi is monic
        for (std::size_t i = 0; i < phi.size(); ++i)
            rem[shift + i] -= c * mpq_class(phi[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return rem.empty();
}

std::vector<long> cyclotomic_polynomial(long q) {
    const Poly& phi = cyclotomic_mpz(q);
    std::vector<long> out;
    out.reserve(phi.size());
    for (const auto& c : phi) {
        if (!c.fits_slong_p()) throw Error("cyclotomic coefficient exceeds long range");
        out.push_back(c.get_si());
    }
    return out;
}

Certificate certify_gst(const Graph& x, const VertexSet& s, const VertexSet& t,
                        long p, long q) {
    if (q < 1) throw Error("certification time must be 2*pi*p/q with q >= 1");
    long g = std::gcd(std::abs(p), q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (p == 0) q = 1;

    Certificate cert;
    cert.graph_hash = graph_hash(x);
    cert.source = s;
    cert.target = t;
    cert.p = p;
    cert.q = q;
    cert.verdict = CertVerdict::certified_gst;

    const auto projs = rational_projectors(x);
    for (int a : s.members()) {
        for (int b = 0; b < x.n(); ++b) {
            if (t.test(b)) continue;
            if (is_zero(entry_at_rational_time(projs, a, b, p, q))) {
                cert.zero_entries.emplace_back(b, a);
            } else {
                cert.verdict = CertVerdict::certified_not_gst;
                cert.nonzero_witness = std::make_pair(b, a);
                return cert;
            }
        }
    }
    return cert;
}

bool projectors_sum_to_identity(const std::vector<std::pair<long, RationalMatrix>>& projs) {
    if (projs.empty()) return false;
    const int n = projs.front().second.rows();
    Mat sum(n);
    for (const auto& [theta, e] : projs) {
        Mat m = from_public(e);
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += m.a[i];
    }
    for (int i = 0; i < n; ++i) sum.at(i, i) -= 1;
    return sum.is_zero();
}

bool projectors_orthogonal_idempotent(
    const std::vector<std::pair<long, RationalMatrix>>& projs) {
    std::vector<Mat> mats;
    for (const auto& [theta, e] : projs) mats.push_back(from_public(e));
    for (std::size_t r = 0; r < mats.size(); ++r)
        for (std::size_t s = 0; s < mats.size(); ++s) {
            Mat prod = mats[r].mul(mats[s]);
            if (r == s)
                for (std::size_t i = 0; i < prod.a.size(); ++i) prod.a[i] -= mats[r].a[i];
            if (!prod.is_zero()) return false;
        }
    return true;
}

ExactScalar exact_add(const ExactScalar& a, const ExactScalar& b) {
    return {canonical(parse_rational(a.value) + parse_rational(b.value))};
}

bool exact_is_zero(const ExactScalar& a) { return parse_rational(a.value) == 0; }

double exact_to_double(const ExactScalar& a) { return parse_rational(a.value).get_d(); }

} // namespace gstwalk
