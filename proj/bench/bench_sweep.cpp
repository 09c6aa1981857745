// Serial reference kernels vs their OpenMP versions.

#include <benchmark/benchmark.h>

#include "sppde/harness.hpp"

using namespace sppde;

namespace {

SweepConfig sweep_config(int eps_max) {
  SweepConfig cfg;
  cfg.ladder = doubling_ladder({256, 16}, 3);
  cfg.eps_exponents = eps_exponents(eps_max);
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = builtin_example(1);
  const auto cfg = sweep_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_sweep_serial(spec, cfg).uniform_D.data());
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = builtin_example(1);
  const auto cfg = sweep_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_sweep(spec, cfg).uniform_D.data());
}

struct Pair {
  GridFunction coarse;
  GridFunction fine;
};

Pair grid_pair(int N, int M) {
  const auto spec = builtin_example(3);
  SweepConfig cfg;
  return {solve_cell(spec, 1e-6, N, M, cfg), solve_cell(spec, 1e-6, 2 * N, 2 * M, cfg)};
}

void BM_MaxDiffSerial(benchmark::State& state) {
  const auto p = grid_pair(static_cast<int>(state.range(0)), static_cast<int>(state.range(0) / 16));
  for (auto _ : state) benchmark::DoNotOptimize(max_diff_serial(p.coarse, p.fine));
}

void BM_MaxDiffParallel(benchmark::State& state) {
  const auto p = grid_pair(static_cast<int>(state.range(0)), static_cast<int>(state.range(0) / 16));
  for (auto _ : state) benchmark::DoNotOptimize(max_diff(p.coarse, p.fine));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxDiffSerial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxDiffParallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
