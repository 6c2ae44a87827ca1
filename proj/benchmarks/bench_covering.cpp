#include <benchmark/benchmark.h>

#include "hypcover/covering.hpp"
#include "hypcover/planar.hpp"

using namespace hypcover;

static void BM_Embed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(embed(7, 3, 7));
}
BENCHMARK(BM_Embed);

static void BM_CoverageCheck(benchmark::State& state) {
  const auto o = embed(7, 3, 7);
  const auto cfg = make_config(o, EdgeId::A1A2, 0.27);
  for (auto _ : state) benchmark::DoNotOptimize(coverage_check(o, cfg));
}
BENCHMARK(BM_CoverageCheck);

static void BM_MinimizeA1A2(benchmark::State& state) {
  const auto o = embed(7, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_noncongruent(o, EdgeId::A1A2));
}
BENCHMARK(BM_MinimizeA1A2)->Unit(benchmark::kMillisecond);

static void BM_SolveCongruent(benchmark::State& state) {
  const auto o = embed(7, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(solve_congruent(o));
}
BENCHMARK(BM_SolveCongruent)->Unit(benchmark::kMillisecond);

static void BM_FamilyU37(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimize_family_u37(6.05, 6.95));
}
BENCHMARK(BM_FamilyU37)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_PlanarDensity(benchmark::State& state) {
  const auto cfg = planar::build_pentagon(1 + 1e-9, 1e3);
  for (auto _ : state) benchmark::DoNotOptimize(planar::density_2d(cfg));
}
BENCHMARK(BM_PlanarDensity)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
