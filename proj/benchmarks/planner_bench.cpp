#include <benchmark/benchmark.h>

#include "cassini/line_vulnerability.hpp"
#include "cassini/oracles.hpp"
#include "cassini/planner.hpp"

using namespace cassini;

static void BM_Plan(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(plan(m, 3 * m, 100.0).c);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Plan)->RangeMultiplier(4)->Range(1, 256)->Complexity();

static void BM_Vulnerability(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto dep = plan(m, 3 * m, 100.0).deployment;
    for (auto _ : state) benchmark::DoNotOptimize(vulnerability(dep).q);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Vulnerability)->RangeMultiplier(4)->Range(1, 256)->Complexity();

static void BM_Ladder(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ladder(10.0, static_cast<std::size_t>(state.range(0))).values.back());
}
BENCHMARK(BM_Ladder)->Arg(4)->Arg(64)->Arg(1024);

static void BM_Exhaustive(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_plan(2, n, 20.0).best_c);
}
BENCHMARK(BM_Exhaustive)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
