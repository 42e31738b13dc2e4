#include <benchmark/benchmark.h>

#include "bench_common.hpp"

using namespace coev;

static void NullEventScanQuantum(benchmark::State& state) {
    const Measure mu{bench::random_rank1(static_cast<std::size_t>(state.range(0)))};
    for (auto _ : state) {
        auto nulls = null_events(mu);
        benchmark::DoNotOptimize(nulls);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(
        std::uint64_t{1} << static_cast<unsigned>(state.range(0))));
}
BENCHMARK(NullEventScanQuantum)->DenseRange(8, 14, 2)->Complexity()->Unit(benchmark::kMillisecond);

static void NullEventScanQuantumThreaded(benchmark::State& state) {
    const Measure mu{bench::random_rank1(14)};
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto nulls = null_events(mu, threads);
        benchmark::DoNotOptimize(nulls);
    }
}
BENCHMARK(NullEventScanQuantumThreaded)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void MaximalNullEvents(benchmark::State& state) {
    const Measure mu{bench::random_rank1(static_cast<std::size_t>(state.range(0)))};
    for (auto _ : state) {
        auto maximal = maximal_null_events(mu);
        benchmark::DoNotOptimize(maximal);
    }
}
BENCHMARK(MaximalNullEvents)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void EvaluateSingleEvent(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Measure mu{bench::random_rank1(n)};
    const EventMask mask = static_cast<EventMask>((std::uint64_t{1} << n) - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mu.evaluate_mask(mask));
    }
}
BENCHMARK(EvaluateSingleEvent)->DenseRange(4, 16, 4);
