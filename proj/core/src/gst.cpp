#include "gstwalk/gst.hpp"

#include <cmath>

#include "gstwalk/error.hpp"

namespace gstwalk {

std::vector<std::string> GSTFlags::names() const {
    std::vector<std::string> out;
    if (trivial) out.push_back("trivial");
    if (maximal) out.push_back("maximal");
    if (bijective) out.push_back("bijective");
    if (periodic) out.push_back("periodic");
    if (pst) out.push_back("pst");
    if (fractional_revival) out.push_back("fractional_revival");
    if (proper_fractional_revival) out.push_back("proper_fractional_revival");
    return out;
}

VertexSet forward_set(const Eigen::MatrixXcd& u, const VertexSet& s, double zero_tol) {
    const int n = static_cast<int>(u.rows());
    VertexSet image(n);
    for (int a : s.members())
        for (int b = 0; b < n; ++b)
            if (std::abs(u(b, a)) > zero_tol) image.set(b);
    return image;
}

VertexSet forward_set(const Spectrum& spec, const VertexSet& s, double t, double zero_tol) {
    return forward_set(transition(spec, t), s, zero_tol);
}

VertexSet inverse_set(const Spectrum& spec, const VertexSet& s, double t, double zero_tol) {
    // a is in I(S,t) iff the column U(-t) e_a is supported inside S.
    const Eigen::MatrixXcd u = transition(spec, -t);
    const int n = spec.n();
    VertexSet result(n);
    for (int a = 0; a < n; ++a) {
        bool inside = true;
        for (int b = 0; b < n && inside; ++b)
            if (!s.test(b) && std::abs(u(b, a)) > zero_tol) inside = false;
        if (inside) result.set(a);
    }
    return result;
}

VertexSet closure(const Eigen::MatrixXcd& u, const VertexSet& s, double zero_tol) {
    const int n = static_cast<int>(u.rows());
    const VertexSet image = forward_set(u, s, zero_tol);
    VertexSet cl(n);
    for (int a = 0; a < n; ++a) {
        bool inside = true;
        for (int b = 0; b < n && inside; ++b)
            if (!image.test(b) && std::abs(u(b, a)) > zero_tol) inside = false;
        if (inside) cl.set(a);
    }
    return cl;
}

VertexSet closure(const Spectrum& spec, const VertexSet& s, double t, double zero_tol) {
    return closure(transition(spec, t), s, zero_tol);
}

namespace {

GSTFlags classify(const Eigen::MatrixXcd& u, const VertexSet& s, const VertexSet& t,
                  const VertexSet& image, double zero_tol) {
    GSTFlags f;
    const int n = static_cast<int>(u.rows());
    f.trivial = s.empty() || t.count() == n;
    f.maximal = (t == image);
    f.bijective = f.maximal && s.count() == t.count();
    f.periodic = f.bijective && s == t;
    f.pst = f.bijective && s.count() == 1 && t.count() == 1 && s != t;
    if (s.count() == 1 && t.count() == 2 && s.subset_of(t)) {
        // Fractional revival on {a,b}: ({a},{a,b})-GST; proper when the
        // state genuinely occupies both vertices.
        f.fractional_revival = true;
        const int a = s.members()[0];
        bool both = true;
        for (int b : t.members())
            if (std::abs(u(b, a)) <= zero_tol) both = false;
        f.proper_fractional_revival = both;
    }
    return f;
}

} // namespace

GSTReport has_gst(const Spectrum& spec, const VertexSet& s, const VertexSet& t,
                  double time, double zero_tol) {
    if (zero_tol <= 0) throw Error("zero_tol must be positive");
    const Eigen::MatrixXcd u = transition(spec, time);
    const int n = spec.n();

    GSTReport rep;
    rep.source = s;
    rep.target = t;
    rep.time = time;
    rep.zero_tol = zero_tol;
    rep.forward_image = forward_set(u, s, zero_tol);

    double residual = 0.0;
    int borderline = 0;
    for (int a : s.members())
        for (int b = 0; b < n; ++b) {
            const double mag = std::abs(u(b, a));
            if (mag > zero_tol && mag <= 10 * zero_tol) ++borderline;
            if (!t.test(b)) residual = std::max(residual, mag);
        }
    rep.residual = residual;
    rep.borderline_entries = borderline;
    rep.holds = rep.forward_image.subset_of(t);
    if (rep.holds) rep.classification = classify(u, s, t, rep.forward_image, zero_tol);
    return rep;
}

GSTReport complement_transfer(const Spectrum& spec, const VertexSet& s,
                              const VertexSet& t, double time, double zero_tol) {
    return has_gst(spec, t.complement(), s.complement(), time, zero_tol);
}

EqualCardReport equal_card_structure(const Spectrum& spec, const VertexSet& s,
                                     const VertexSet& t, double time, double zero_tol) {
    if (s.count() != t.count())
        throw Error("equal_card_structure requires |S| = |T|");
    GSTReport base = has_gst(spec, s, t, time, zero_tol);
    if (!base.holds)
        throw Error("equal_card_structure requires (S,T)-GST to hold at the given time");

    const VertexSet i = s.intersect_with(t);
    const VertexSet s_only = s.difference_with(i);
    const VertexSet t_only = t.difference_with(i);
    const VertexSet rest = s.union_with(t).complement();

    EqualCardReport rep;
    auto clause = [&](const std::string& name, const VertexSet& from, const VertexSet& to,
                      double at) {
        GSTReport r = has_gst(spec, from, to, at, zero_tol);
        rep.clauses.push_back({name, r.holds, r.residual});
    };
    clause("(a) (T,S)-GST at t", t, s, time);
    clause("(b) (S\\I,T\\I)-GST at t", s_only, t_only, time);
    clause("(c) (T\\I,S\\I)-GST at t", t_only, s_only, time);
    clause("(d) I periodic at t", i, i, time);
    {
        GSTReport rs = has_gst(spec, s, s, 2 * time, zero_tol);
        GSTReport rt = has_gst(spec, t, t, 2 * time, zero_tol);
        rep.clauses.push_back({"(e) S and T periodic at 2t", rs.holds && rt.holds,
                               std::max(rs.residual, rt.residual)});
    }
    clause("(f) V\\(SuT) periodic at t", rest, rest, time);

    rep.all_hold = true;
    for (const auto& c : rep.clauses) rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

ParallelCheck parallel_check(const Spectrum& spec, const VertexSet& s,
                             const VertexSet& t, double tol) {
    if (s.count() != t.count())
        throw Error("parallel_check requires |S| = |T|");
    const int n = spec.n();
    ParallelCheck out;
    out.all_equal = true;

    auto span_projector = [&](const Eigen::MatrixXd& e, const VertexSet& set) {
        const auto idx = set.members();
        Eigen::MatrixXd cols(n, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) cols.col(j) = e.col(idx[j]);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
        const auto& sv = svd.singularValues();
        const double cutoff = sv.size() ? std::max(1e-12, 1e-10 * sv(0)) : 0.0;
        int rank = 0;
        for (int k = 0; k < sv.size(); ++k)
            if (sv(k) > cutoff) ++rank;
        if (rank == 0) return Eigen::MatrixXd(Eigen::MatrixXd::Zero(n, n));
        const Eigen::MatrixXd basis = svd.matrixU().leftCols(rank);
        return Eigen::MatrixXd(basis * basis.transpose());
    };

    for (int r = 0; r < spec.distinct_count(); ++r) {
        const Eigen::MatrixXd ps = span_projector(spec.projectors[r], s);
        const Eigen::MatrixXd pt = span_projector(spec.projectors[r], t);
        const double dev = (ps - pt).cwiseAbs().maxCoeff();
        out.deviations.push_back(dev);
        out.equal_span.push_back(dev <= tol);
        out.all_equal = out.all_equal && dev <= tol;
    }
    return out;
}

} // namespace gstwalk
