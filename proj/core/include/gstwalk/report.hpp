#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "gstwalk/exact.hpp"
#include "gstwalk/gst.hpp"
#include "gstwalk/poset.hpp"
#include "gstwalk/scan.hpp"
#include "gstwalk/spectrum.hpp"
#include "gstwalk/symmetry.hpp"

namespace gstwalk {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// JSON conventions: subsets as sorted 1-indexed arrays, complex numbers as
// [re, im] pairs, exact rationals as "num/den" strings.
Json to_json(const VertexSet& s);
Json to_json(const std::complex<double>& z);
Json to_json(const GSTReport& r);
Json to_json(const Spectrum& spec);
Json to_json(const SpectrumDiagnostics& d);
Json to_json(const EqualCardReport& r);
Json to_json(const ParallelCheck& r);
Json to_json(const ZeroHit& h);
Json to_json(const GstEvent& e);
Json to_json(const ScanResult& r);
Json to_json(const CandidateTime& c);
Json to_json(const MonogamyAudit& a);
Json to_json(const SrgCandidates& c);
Json to_json(const MaximalPairMap& m);
Json to_json(const TopologyAtTime& t);
Json to_json(const Permutation& p);
Json to_json(const SymmetryReport& r);
Json to_json(const Certificate& c);

/// Standard report envelope around one verb's payload.
Json make_report(const std::string& command, const Json& graph_summary,
                 const Json& results, const Json& tolerances,
                 const std::vector<std::string>& warnings);

/// Graph summary block: n, edge count, 1-indexed edges, spectrum sketch.
Json graph_summary(const Graph& x, const Spectrum* spec = nullptr);

} // namespace gstwalk
