#include <benchmark/benchmark.h>

#include "gstwalk/generators.hpp"
#include "gstwalk/gst.hpp"
#include "gstwalk/poset.hpp"
#include "gstwalk/scan.hpp"

using namespace gstwalk;

static void BM_decompose_hypercube(benchmark::State& state) {
    const Graph g = make_hypercube(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_decompose_hypercube)->Arg(3)->Arg(5)->Arg(6);

static void BM_transition(benchmark::State& state) {
    const Spectrum spec = decompose(make_hypercube(static_cast<int>(state.range(0))));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(transition(spec, t));
        t += 0.1;
    }
}
BENCHMARK(BM_transition)->Arg(3)->Arg(5)->Arg(6);

static void BM_has_gst(benchmark::State& state) {
    const Graph g = make_hypercube(5);
    const Spectrum spec = decompose(g);
    VertexSet s(32), t(32);
    for (int v : {0, 3, 7, 12}) {
        s.set(v);
        t.set(v ^ 31);
    }
    for (auto _ : state) benchmark::DoNotOptimize(has_gst(spec, s, t, M_PI / 2));
}
BENCHMARK(BM_has_gst);

static void BM_entry_zero_scan_mckay(benchmark::State& state) {
    const Spectrum spec = decompose(make_mckay());
    const double to = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(entry_zero_scan(spec, 0.0, to, 1e-3));
}
BENCHMARK(BM_entry_zero_scan_mckay)->Arg(5)->Arg(30);

static void BM_topology_at(benchmark::State& state) {
    const Spectrum spec = decompose(make_hypercube(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(topology_at(spec, M_PI / 2));
}
BENCHMARK(BM_topology_at)->Arg(2)->Arg(3)->Arg(4);

static void BM_periodic_sets(benchmark::State& state) {
    const Spectrum spec = decompose(make_hypercube(4));
    for (auto _ : state) benchmark::DoNotOptimize(periodic_sets(spec, M_PI / 2));
}
BENCHMARK(BM_periodic_sets);

BENCHMARK_MAIN();
