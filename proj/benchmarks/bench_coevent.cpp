#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "coev/verify.hpp"

using namespace coev;

static void FullSweepMultiplicativityEquivalence(benchmark::State& state) {
    const SpacePtr space = bench::make_space(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto report = verify_multiplicativity_equivalence(space);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(FullSweepMultiplicativityEquivalence)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void FullSweepHomomorphismCriterion(benchmark::State& state) {
    const SpacePtr space = bench::make_space(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto report = verify_homomorphism_criterion(space);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(FullSweepHomomorphismCriterion)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void PredicateBatteryOnSupportCoevent(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const SpacePtr space = bench::make_space(n);
    const CoEvent phi = from_support(Event(space, (EventMask{1} << (n / 2 + 1)) - 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_multiplicative(phi));
        benchmark::DoNotOptimize(is_mp(phi));
        benchmark::DoNotOptimize(affirmed_is_filter(phi));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(space->event_count()));
}
BENCHMARK(PredicateBatteryOnSupportCoevent)->DenseRange(6, 12, 2)->Complexity();

static void SupportRoundTrip(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const SpacePtr space = bench::make_space(n);
    const Event support(space, (EventMask{1} << (n - 1)) | 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(support_of(from_support(support)));
    }
}
BENCHMARK(SupportRoundTrip)->DenseRange(8, 16, 4);
