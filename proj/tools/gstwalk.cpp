// gstwalk: continuous-time quantum walk simulator with group state
// transfer detection, scanning and exact certification.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gstwalk/dsl.hpp"
#include "gstwalk/error.hpp"
#include "gstwalk/exact.hpp"
#include "gstwalk/golden.hpp"
#include "gstwalk/gst.hpp"
#include "gstwalk/poset.hpp"
#include "gstwalk/report.hpp"
#include "gstwalk/scan.hpp"
#include "gstwalk/symmetry.hpp"

namespace {

using namespace gstwalk;

struct CommonOpts {
    std::string graph;
    std::string out;
    double eigen_tol = 0.0;   // 0 = default
    double zero_tol = kDefaultZeroTol;
};

GeneratorSpec load_graph_spec(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open graph file '" + arg.substr(1) + "'");
        return parse_edge_list(in);
    }
    return parse_graph_dsl(arg);
}

void emit(const Json& report, const std::string& out_path) {
    const std::string text = report.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write report to '" + out_path + "'");
        out << text << "\n";
    }
}

std::vector<Permutation> load_permutations(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open permutation file '" + path + "'");
    std::vector<Permutation> perms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> images;
        long v;
        while (ls >> v) {
            if (v < 1 || v > n)
                throw Error("permutation file line " + std::to_string(lineno) +
                            ": image outside 1.." + std::to_string(n));
            images.push_back(static_cast<int>(v - 1));
        }
        if (images.empty()) continue;
        if (static_cast<int>(images.size()) != n)
            throw Error("permutation file line " + std::to_string(lineno) + ": expected " +
                        std::to_string(n) + " images");
        perms.emplace_back(images);
    }
    if (perms.empty()) throw Error("permutation file '" + path + "' holds no permutations");
    return perms;
}

int run(int argc, char** argv) {
    CLI::App app{"continuous-time quantum walks and group state transfer"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string source_arg, target_arg, time_arg = "0", group_file;
    double from = 0.0, to = 2 * M_PI, step = 1e-3;
    int cap = 16;

    auto add_common = [&](CLI::App* sub, bool needs_graph = true) {
        sub->add_option("--graph", opts.graph, "generator DSL or @edge-list-file")
            ->required(needs_graph);
        sub->add_option("--eigen-tol", opts.eigen_tol, "eigenvalue clustering tolerance");
        sub->add_option("--zero-tol", opts.zero_tol, "support threshold on |U(t)| entries");
        sub->add_option("--out", opts.out, "write the JSON report to this path");
    };

    auto* cmd_spectrum = app.add_subcommand("spectrum", "eigendecomposition report");
    add_common(cmd_spectrum);

    auto* cmd_evolve = app.add_subcommand("evolve", "transition matrix U(t)");
    add_common(cmd_evolve);
    cmd_evolve->add_option("--time", time_arg, "evolution time")->required();

    auto* cmd_check = app.add_subcommand("check", "decide (S,T)-GST at a time");
    add_common(cmd_check);
    cmd_check->add_option("--source", source_arg, "S as 1-indexed list")->required();
    cmd_check->add_option("--target", target_arg, "T as 1-indexed list")->required();
    cmd_check->add_option("--time", time_arg, "time expression")->required();

    auto* cmd_scan = app.add_subcommand("scan", "locate entry zeros and GST events");
    add_common(cmd_scan);
    cmd_scan->add_option("--from", from, "interval start");
    cmd_scan->add_option("--to", to, "interval end");
    cmd_scan->add_option("--step", step, "grid step");
    cmd_scan->add_option("--report", opts.out, "write the JSON report to this path");

    auto* cmd_poset = app.add_subcommand("poset", "state transfer poset / maximal pairs");
    add_common(cmd_poset);
    cmd_poset->add_option("--time", time_arg, "time expression")->required();
    cmd_poset->add_option("--cap", cap, "periodic-set enumeration cap");

    auto* cmd_topology = app.add_subcommand("topology", "t-closed and t-open sets");
    add_common(cmd_topology);
    cmd_topology->add_option("--time", time_arg, "time expression")->required();
    cmd_topology->add_option("--cap", cap, "subset enumeration cap");

    auto* cmd_orbits = app.add_subcommand("orbits", "automorphism orbits and GST symmetry");
    add_common(cmd_orbits);
    cmd_orbits->add_option("--group", group_file, "@file with 1-indexed image rows");
    cmd_orbits->add_option("--source", source_arg, "S as 1-indexed list");
    cmd_orbits->add_option("--target", target_arg, "T as 1-indexed list");
    cmd_orbits->add_option("--time", time_arg, "time expression");

    auto* cmd_certify = app.add_subcommand("certify", "exact cyclotomic certificate");
    add_common(cmd_certify);
    cmd_certify->add_option("--source", source_arg, "S as 1-indexed list")->required();
    cmd_certify->add_option("--target", target_arg, "T as 1-indexed list")->required();
    cmd_certify->add_option("--time", time_arg, "exact time 2pi:p/q")->required();

    auto* cmd_golden = app.add_subcommand("golden", "run the golden acceptance suite");
    cmd_golden->add_option("--out", opts.out, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are errors, --help is not
    }

    if (cmd_golden->parsed()) {
        const auto results = run_golden();
        Json arr = Json::array();
        bool all = true;
        for (const auto& r : results) {
            std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.index << ": "
                      << r.name << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
            arr.push_back({{"index", r.index},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail}});
            all = all && r.passed;
        }
        emit(make_report("golden", Json::object(), arr, Json::object(), {}), opts.out);
        return all ? 0 : 1;
    }

    const GeneratorSpec spec_tree = load_graph_spec(opts.graph);
    const Graph graph = build(spec_tree);
    const Spectrum spec = decompose(graph, opts.eigen_tol);
    const Json tolerances{{"eigen_tol", spec.eigen_tol}, {"zero_tol", opts.zero_tol}};
    const std::string graph_name = print_spec(spec_tree);

    if (cmd_spectrum->parsed()) {
        Json results = to_json(spec);
        results["diagnostics"] = to_json(verify_spectrum(spec, graph));
        emit(make_report("spectrum " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, {}),
             opts.out);
        std::cerr << graph_name << ": " << spec.distinct_count() << " distinct eigenvalues\n";
        return 0;
    }

    if (cmd_evolve->parsed()) {
        const TimeSpec t = parse_time(time_arg);
        const Eigen::MatrixXcd u = transition(spec, t.value);
        Json rows = Json::array();
        for (int i = 0; i < graph.n(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < graph.n(); ++j) row.push_back(to_json(u(i, j)));
            rows.push_back(row);
        }
        emit(make_report("evolve " + graph_name, graph_summary(graph, &spec),
                         Json{{"time", t.value}, {"matrix", rows}}, tolerances, {}),
             opts.out);
        return 0;
    }

    if (cmd_check->parsed()) {
        const TimeSpec t = parse_time(time_arg);
        const VertexSet s = parse_vertex_list(source_arg, graph.n());
        const VertexSet tt = parse_vertex_list(target_arg, graph.n());
        const GSTReport rep = has_gst(spec, s, tt, t.value, opts.zero_tol);
        std::vector<std::string> warnings;
        if (rep.borderline_entries > 0)
            warnings.push_back(std::to_string(rep.borderline_entries) +
                               " entries in the borderline band (zero_tol, 10*zero_tol]");
        Json results = to_json(rep);
        if (rep.holds && s.count() == tt.count() && !s.empty()) {
            results["equal_card_structure"] =
                to_json(equal_card_structure(spec, s, tt, t.value, opts.zero_tol));
            results["parallel_check"] = to_json(parallel_check(spec, s, tt));
        }
        emit(make_report("check " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, warnings),
             opts.out);
        std::cerr << "(S,T)-GST at t=" << t.value << ": "
                  << (rep.holds ? "holds" : "does not hold") << " (residual " << rep.residual
                  << ")\n";
        return rep.holds ? 0 : 1;
    }

    if (cmd_scan->parsed()) {
        const ScanResult result = entry_zero_scan(spec, from, to, step, opts.zero_tol);
        Json results = to_json(result);
        results["monogamy_audit"] = to_json(monogamy_audit(result));
        emit(make_report("scan " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, result.warnings),
             opts.out);
        std::cerr << result.hits.size() << " hits, " << result.gst_events.size()
                  << " GST events, " << result.identity_times.size() << " identity times\n";
        return 0;
    }

    if (cmd_poset->parsed()) {
        const TimeSpec t = parse_time(time_arg);
        Json results{{"maximal_pairs", to_json(maximal_pairs(spec, t.value, opts.zero_tol))}};
        if (graph.n() <= 5) {
            Json pairs = Json::array();
            for (const auto& [s, tt] : st_poset(spec, t.value, opts.zero_tol))
                pairs.push_back({{"source", to_json(s)}, {"target", to_json(tt)}});
            results["st_poset"] = pairs;
        }
        if (graph.n() <= cap) {
            Json periodic = Json::array();
            for (const auto& s : periodic_sets(spec, t.value, cap, opts.zero_tol))
                periodic.push_back(to_json(s));
            results["periodic_sets"] = periodic;
        }
        emit(make_report("poset " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, {}),
             opts.out);
        return 0;
    }

    if (cmd_topology->parsed()) {
        const TimeSpec t = parse_time(time_arg);
        const TopologyAtTime topo = topology_at(spec, t.value, cap, opts.zero_tol);
        Json results = to_json(topo);
        results["axioms_hold"] = verify_topology_axioms(topo);
        Json exceptional = Json::array();
        for (const auto& s :
             closed_vs_bijective_report(spec, t.value, cap, opts.zero_tol))
            exceptional.push_back(to_json(s));
        results["closed_but_not_bijective"] = exceptional;
        emit(make_report("topology " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, {}),
             opts.out);
        return 0;
    }

    if (cmd_orbits->parsed()) {
        std::vector<Permutation> gens;
        if (!group_file.empty()) {
            const std::string path =
                group_file[0] == '@' ? group_file.substr(1) : group_file;
            gens = load_permutations(path, graph.n());
        } else {
            gens = known_automorphism_generators(spec_tree);
            if (gens.empty())
                throw Error("no built-in generators for this family; pass --group @file");
        }
        for (const auto& g : gens)
            if (!is_automorphism(graph, g))
                throw Error("supplied permutation is not an automorphism of the graph");
        const PermGroup group = group_closure(gens);

        Json results{{"group_order", group.order()}};
        if (!source_arg.empty()) {
            const VertexSet s = parse_vertex_list(source_arg, graph.n());
            Json orbit = Json::array();
            for (const auto& image : orbit_of_set(s, group)) orbit.push_back(to_json(image));
            results["orbit"] = orbit;
            results["stabilizer_order"] = setwise_stabilizer(s, group).order();
            if (!target_arg.empty()) {
                const TimeSpec t = parse_time(time_arg);
                const VertexSet tt = parse_vertex_list(target_arg, graph.n());
                results["symmetry_check"] = to_json(
                    gst_symmetry_check(spec, graph, s, tt, t.value, group, opts.zero_tol));
            }
        }
        emit(make_report("orbits " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, {}),
             opts.out);
        return 0;
    }

    if (cmd_certify->parsed()) {
        const TimeSpec t = parse_time(time_arg);
        if (!t.exact)
            throw Error("certification requires the exact time form 2pi:p/q");
        const VertexSet s = parse_vertex_list(source_arg, graph.n());
        const VertexSet tt = parse_vertex_list(target_arg, graph.n());
        const Certificate cert = certify_gst(graph, s, tt, t.p, t.q);
        // Agreement sanity: the float residual should echo the verdict.
        const GSTReport numeric = has_gst(spec, s, tt, t.value, opts.zero_tol);
        Json results = to_json(cert);
        results["numeric_residual"] = numeric.residual;
        emit(make_report("certify " + graph_name, graph_summary(graph, &spec), results,
                         tolerances, {}),
             opts.out);
        const bool certified = cert.verdict == CertVerdict::certified_gst;
        std::cerr << (certified ? "certified-GST" : "certified-not-GST") << " at 2*pi*"
                  << t.p << "/" << t.q << "\n";
        return certified ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        Json err = make_report("error", Json::object(), Json{{"error", e.what()}},
                               Json::object(), {e.what()});
        std::cout << err.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
