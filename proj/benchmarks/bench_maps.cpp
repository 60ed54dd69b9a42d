#include <benchmark/benchmark.h>

#include <spiralemb/chain.hpp>
#include <spiralemb/double_spiral.hpp>
#include <spiralemb/spiral.hpp>
#include <spiralemb/torus_strip.hpp>

namespace {

using namespace spiralemb;

const SpiralParams kParams{1.0, 1.0, 0.1, 0.05, 0.2, 0.0, +1};

void BM_SpiralEval(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    x += 1e-7;
    if (x > 0.9) x = 0.1;
    benchmark::DoNotOptimize(spiral_eval(kParams, {x, 0.5}));
  }
}
BENCHMARK(BM_SpiralEval);

void BM_SpiralJacobian(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    x += 1e-7;
    if (x > 0.9) x = 0.1;
    benchmark::DoNotOptimize(spiral_jacobian(kParams, {x, 0.5}));
  }
}
BENCHMARK(BM_SpiralJacobian);

void BM_CutoffEval(benchmark::State& state) {
  const CutoffProfile chi = CutoffProfile::build(1.0, 0.1);
  double x = -1.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 1.0) x = -1.0;
    benchmark::DoNotOptimize(chi.eval(x, 0));
  }
}
BENCHMARK(BM_CutoffEval);

void BM_FlowTime1(benchmark::State& state) {
  const CutoffProfile chi = CutoffProfile::build(1.0, 0.1);
  double x = -1.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 1.0) x = -1.0;
    benchmark::DoNotOptimize(flow_time1(chi, {x, 0.02, 0.7, 0.4}));
  }
}
BENCHMARK(BM_FlowTime1);

void BM_DoubleSpiralEval(benchmark::State& state) {
  const DoubleSpiralConfig config = DoubleSpiralConfig::with_default_m(1.0, 0.1);
  double x = -0.9;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 0.9) x = -0.9;
    benchmark::DoNotOptimize(double_spiral_eval(config, PlanarPoint{x, 0.01}));
  }
}
BENCHMARK(BM_DoubleSpiralEval);

void BM_CompositeSample(benchmark::State& state) {
  const ChainConfig config = ChainConfig::with_default_m(0.1);
  const CutoffProfile chi = CutoffProfile::build(config.A, config.eps);
  double x = -0.9;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 0.9) x = -0.9;
    benchmark::DoNotOptimize(j_eval(config, chi, {x, 0.01}, {0.6, 1.1}));
  }
}
BENCHMARK(BM_CompositeSample);

}  // namespace

BENCHMARK_MAIN();
