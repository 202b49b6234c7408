#include "gstwalk/report.hpp"

namespace gstwalk {

Json to_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v : s.members()) arr.push_back(v + 1);
    return arr;
}

Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const GSTReport& r) {
    return Json{{"source", to_json(r.source)},
                {"target", to_json(r.target)},
                {"time", r.time},
                {"zero_tol", r.zero_tol},
                {"holds", r.holds},
                {"residual", r.residual},
                {"classification", r.classification.names()},
                {"forward_image", to_json(r.forward_image)},
                {"borderline_entries", r.borderline_entries}};
}

Json to_json(const Spectrum& spec) {
    return Json{{"distinct_eigenvalues", spec.eigenvalues},
                {"multiplicities", spec.multiplicities},
                {"eigen_tol", spec.eigen_tol}};
}

Json to_json(const SpectrumDiagnostics& d) {
    return Json{{"sum_to_identity", d.sum_to_identity},
                {"orthogonality", d.orthogonality},
                {"reconstruction", d.reconstruction}};
}

Json to_json(const EqualCardReport& r) {
    Json clauses = Json::array();
    for (const auto& c : r.clauses)
        clauses.push_back({{"clause", c.name}, {"holds", c.holds}, {"residual", c.residual}});
    return Json{{"clauses", clauses}, {"all_hold", r.all_hold}};
}

Json to_json(const ParallelCheck& r) {
    Json per = Json::array();
    for (std::size_t i = 0; i < r.equal_span.size(); ++i)
        per.push_back({{"equal_span", static_cast<bool>(r.equal_span[i])},
                       {"deviation", r.deviations[i]}});
    return Json{{"per_eigenvalue", per}, {"all_equal", r.all_equal}};
}

Json to_json(const ZeroHit& h) {
    return Json{{"row", h.row + 1},
                {"col", h.col + 1},
                {"time", h.time},
                {"refined_residual", h.refined_residual}};
}

Json to_json(const GstEvent& e) {
    Json pairs = Json::array();
    for (const auto& [s, t] : e.pairs)
        pairs.push_back({{"source", to_json(s)}, {"target", to_json(t)}});
    return Json{{"time", e.time}, {"pairs", pairs}};
}

Json to_json(const ScanResult& r) {
    Json hits = Json::array();
    for (const auto& h : r.hits) hits.push_back(to_json(h));
    Json events = Json::array();
    for (const auto& e : r.gst_events) events.push_back(to_json(e));
    Json borderline = Json::array();
    for (const auto& h : r.borderline) borderline.push_back(to_json(h));
    return Json{{"from", r.from},
                {"to", r.to},
                {"grid_step", r.grid_step},
                {"zero_tol", r.zero_tol},
                {"hits", hits},
                {"gst_events", events},
                {"identity_times", r.identity_times},
                {"borderline", borderline},
                {"warnings", r.warnings}};
}

Json to_json(const CandidateTime& c) {
    return Json{{"description", c.description},
                {"time", c.time},
                {"source", to_json(c.source)},
                {"target", to_json(c.target)},
                {"residual", c.residual}};
}

Json to_json(const MonogamyAudit& a) {
    Json entries = Json::array();
    for (const auto& e : a.entries) {
        Json targets = Json::array();
        for (const auto& t : e.targets) targets.push_back(to_json(t));
        entries.push_back({{"source", to_json(e.source)},
                           {"targets", targets},
                           {"violation", e.violation}});
    }
    return Json{{"entries", entries}, {"violations", a.violations}};
}

Json to_json(const SrgCandidates& c) {
    Json times = Json::array();
    for (const auto& t : c.times) times.push_back(to_json(t));
    Json out{{"times", times}, {"notes", c.notes}};
    if (c.conference) {
        out["conference_sweep"] = Json{{"bound", c.conference->bound},
                                       {"solutions", c.conference->solutions},
                                       {"best_b", c.conference->best_b},
                                       {"best_residual", c.conference->best_residual}};
    }
    return out;
}

Json to_json(const MaximalPairMap& m) {
    Json images = Json::array();
    for (const auto& img : m.singleton_images) images.push_back(to_json(img));
    return Json{{"time", m.time}, {"zero_tol", m.zero_tol}, {"singleton_images", images}};
}

Json to_json(const TopologyAtTime& t) {
    Json closed = Json::array(), open = Json::array();
    for (const auto& s : t.closed_sets) closed.push_back(to_json(s));
    for (const auto& s : t.open_sets) open.push_back(to_json(s));
    return Json{{"time", t.time}, {"closed_sets", closed}, {"open_sets", open}};
}

Json to_json(const Permutation& p) {
    Json arr = Json::array();
    for (int v : p.images()) arr.push_back(v + 1);
    return arr;
}

Json to_json(const SymmetryReport& r) {
    Json clauses = Json::array();
    for (const auto& c : r.clauses)
        clauses.push_back({{"clause", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    return Json{{"clauses", clauses}, {"all_hold", r.all_hold}};
}

Json to_json(const Certificate& c) {
    Json zeros = Json::array();
    for (auto [b, a] : c.zero_entries) zeros.push_back(Json::array({b + 1, a + 1}));
    Json out{{"graph_hash", c.graph_hash},
             {"source", to_json(c.source)},
             {"target", to_json(c.target)},
             {"p", c.p},
             {"q", c.q},
             {"verdict",
              c.verdict == CertVerdict::certified_gst ? "certified-GST" : "certified-not-GST"},
             {"zero_entries", zeros}};
    if (c.nonzero_witness)
        out["nonzero_witness"] =
            Json::array({c.nonzero_witness->first + 1, c.nonzero_witness->second + 1});
    return out;
}

Json make_report(const std::string& command, const Json& graph_summary, const Json& results,
                 const Json& tolerances, const std::vector<std::string>& warnings) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"graph", graph_summary},
                {"results", results},
                {"tolerances", tolerances},
                {"warnings", warnings}};
}

Json graph_summary(const Graph& x, const Spectrum* spec) {
    Json edges = Json::array();
    for (auto [a, b] : x.edges()) edges.push_back(Json::array({a + 1, b + 1}));
    Json out{{"n", x.n()}, {"edge_count", x.edge_count()}, {"edges", edges}};
    if (spec) out["spectrum"] = to_json(*spec);
    return out;
}

} // namespace gstwalk
