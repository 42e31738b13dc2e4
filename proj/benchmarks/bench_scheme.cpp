#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "coev/scheme.hpp"

using namespace coev;

static void MinimalSupportSolver(benchmark::State& state) {
    const Measure mu{bench::random_rank1(static_cast<std::size_t>(state.range(0)))};
    for (auto _ : state) {
        auto supports = minimal_nonstymied_events(mu);
        benchmark::DoNotOptimize(supports);
    }
}
BENCHMARK(MinimalSupportSolver)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void FullSolve(benchmark::State& state) {
    const Measure mu{bench::random_rank1(static_cast<std::size_t>(state.range(0)))};
    for (auto _ : state) {
        auto solution = solve(mu);
        benchmark::DoNotOptimize(solution);
    }
}
BENCHMARK(FullSolve)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void EquivalenceReportLiteral(benchmark::State& state) {
    // n = 4 exercises the literal co-event sweep inside the report.
    const Measure mu{bench::random_rank1(4)};
    for (auto _ : state) {
        auto report = equivalence_report(mu);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(EquivalenceReportLiteral)->Unit(benchmark::kMillisecond);
