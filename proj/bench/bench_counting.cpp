// Serial reference kernels against the parallel defaults on the shipped
// surfaces; run with --benchmark_filter to isolate one kernel.
#include <benchmark/benchmark.h>

#include "k3lab/counting.hpp"
#include "k3lab/fixtures.hpp"

using namespace k3lab;

namespace {

const SurfaceFixture& sextic_fixture() {
    static const SurfaceFixture fx = load_fixture("X2");
    return fx;
}

const SurfaceFixture& quartic_fixture() {
    static const SurfaceFixture fx = load_fixture("X4");
    return fx;
}

void bench_double_cover(benchmark::State& state, ExecMode mode) {
    FqContext ctx(state.range(0), 1);
    const MultiPoly& f = sextic_fixture().poly("sextic");
    for (auto _ : state) benchmark::DoNotOptimize(count_double_cover(f, ctx, mode));
}

void bench_quartic_count(benchmark::State& state, ExecMode mode) {
    FqContext ctx(state.range(0), 1);
    const MultiPoly& F = quartic_fixture().poly("surface");
    for (auto _ : state) benchmark::DoNotOptimize(count_hypersurface_p3(F, ctx, mode));
}

void bench_singular_scan(benchmark::State& state, ExecMode mode) {
    FqContext ctx(state.range(0), 1);
    const MultiPoly& F = quartic_fixture().poly("surface");
    for (auto _ : state) benchmark::DoNotOptimize(singular_search({F}, ctx, mode));
}

}  // namespace

BENCHMARK_CAPTURE(bench_double_cover, serial, ExecMode::serial)->Arg(11)->Arg(41)->Arg(101);
BENCHMARK_CAPTURE(bench_double_cover, parallel, ExecMode::parallel)->Arg(11)->Arg(41)->Arg(101);
BENCHMARK_CAPTURE(bench_quartic_count, serial, ExecMode::serial)->Arg(11)->Arg(31);
BENCHMARK_CAPTURE(bench_quartic_count, parallel, ExecMode::parallel)->Arg(11)->Arg(31);
BENCHMARK_CAPTURE(bench_singular_scan, serial, ExecMode::serial)->Arg(11);
BENCHMARK_CAPTURE(bench_singular_scan, parallel, ExecMode::parallel)->Arg(11);

BENCHMARK_MAIN();
