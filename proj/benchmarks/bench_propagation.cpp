#include <benchmark/benchmark.h>

#include "fewcycle/bloch.hpp"
#include "fewcycle/sweep.hpp"

using namespace fewcycle;

static void BM_BlochRhs(benchmark::State& state) {
  const LambdaAtom atom(3.0, 0.4);
  BlochVector rho{0.5, 0.3, 0.2, {0.1, 0.05}, {-0.02, 0.03}, {0.04, -0.01}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho = rho + 1e-9 * bloch_rhs(atom, 0.76, 0.79, rho));
  }
}
BENCHMARK(BM_BlochRhs);

static void BM_PropagateGaussian(benchmark::State& state) {
  Scenario s = gaussian_reference_scenario();
  for (auto _ : state) benchmark::DoNotOptimize(propagate_observables(s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.grid().steps()));
}
BENCHMARK(BM_PropagateGaussian)->Unit(benchmark::kMillisecond);

static void BM_PropagateSincStored(benchmark::State& state) {
  Scenario s = sinc_reference_scenario();
  for (auto _ : state) benchmark::DoNotOptimize(propagate(s, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.grid().steps()));
}
BENCHMARK(BM_PropagateSincStored)->Unit(benchmark::kMillisecond);

static void BM_WavefunctionOracle(benchmark::State& state) {
  Scenario s = gaussian_reference_scenario();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        propagate_wavefunction_oracle(s.atom, s.pump, s.stokes, {1.0, 0.0, 0.0}, s.grid(), 1000));
}
BENCHMARK(BM_WavefunctionOracle)->Unit(benchmark::kMillisecond);

// 8x8 Rabi grid at several worker counts.
static void BM_SweepWorkers(benchmark::State& state) {
  SweepSpec spec = rabi_map_defaults(PulseShape::GaussianChirped);
  spec.axes[0].count = spec.axes[1].count = 8;
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.cell_count()));
}
BENCHMARK(BM_SweepWorkers)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
