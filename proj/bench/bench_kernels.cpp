// OpenMP kernels against their serial references.

#include "dicke/cli/sweep.hpp"
#include "dicke/dynamics.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

dicke::SimulationConfig series_config(std::int64_t spins) {
  dicke::SimulationConfig cfg;
  cfg.spins = spins;
  cfg.photons = 100 * spins;
  cfg.t_max = 2.0 * std::numbers::pi / (2.0 * std::sqrt(static_cast<double>(cfg.photons)));
  cfg.steps = 4000;
  return cfg;
}

dicke::cli::SweepGrid sweep_grid() {
  dicke::cli::SweepGrid grid;
  for (std::int64_t n = 1; n <= 16; ++n) grid.spins.push_back(n);
  grid.photons_per_spin = 100;
  return grid;
}

void BM_RunParallel(benchmark::State& state) {
  const auto cfg = series_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dicke::run(cfg));
}

void BM_RunSerial(benchmark::State& state) {
  const auto cfg = series_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dicke::run_serial(cfg));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto grid = sweep_grid();
  for (auto _ : state) benchmark::DoNotOptimize(dicke::cli::run_sweep(grid, {}));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = sweep_grid();
  for (auto _ : state) benchmark::DoNotOptimize(dicke::cli::run_sweep_serial(grid, {}));
}

}  // namespace

BENCHMARK(BM_RunParallel)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunSerial)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
