#include <benchmark/benchmark.h>

#include "phasekit/phasekit.hpp"

using namespace phasekit;

namespace {

void BM_GegenbauerBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GegenbauerOrder order(0.25);
  for (auto _ : state) {
    std::vector<double> c = gegenbauer_eval_all(order, n, 0.37);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_GegenbauerBatch)->Arg(128)->Arg(1024);

void BM_BuildQuadrature(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    QuadratureRule rule = build_quadrature(q);
    benchmark::DoNotOptimize(rule.phi.data());
  }
}
BENCHMARK(BM_BuildQuadrature)->Arg(256)->Arg(2048);

void BM_BuildPhaseTable(benchmark::State& state) {
  TruncationConfig cfg(static_cast<int>(state.range(0)), 4);
  QuadratureRule grid = build_quadrature(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    PhaseStateTable table = build_phase_table(cfg, grid);
    benchmark::DoNotOptimize(table.plus.data());
  }
}
BENCHMARK(BM_BuildPhaseTable)->Args({128, 1024})->Args({256, 2048});

void BM_SpectralOperator(benchmark::State& state) {
  TruncationConfig cfg(static_cast<int>(state.range(0)), 4);
  PhaseStateTable table = build_phase_table(cfg, build_quadrature(static_cast<int>(state.range(1))));
  for (auto _ : state) {
    BandedHermitianOperator op = build_phi(table);
    benchmark::DoNotOptimize(op.mat.data().data());
  }
}
BENCHMARK(BM_SpectralOperator)->Args({128, 1024})->Args({256, 2048});

void BM_BandedMoment(benchmark::State& state) {
  TruncationConfig cfg(128, 4);
  for (auto _ : state) {
    double m = moment_even(10, 3, cfg);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_BandedMoment);

void BM_ExactMoment(benchmark::State& state) {
  for (auto _ : state) {
    Rational m = moment_even_exact(10, 3);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ExactMoment);

void BM_Heisenberg(benchmark::State& state) {
  TruncationConfig cfg(256, 4);
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  for (auto _ : state) {
    BandedHermitianOperator moved = heisenberg(c2, EvolutionTime{0.5 * M_PI});
    benchmark::DoNotOptimize(moved.mat.data().data());
  }
}
BENCHMARK(BM_Heisenberg);

void BM_CoherentSeries(benchmark::State& state) {
  for (auto _ : state) {
    double s = coherent_series_factor(64.0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CoherentSeries);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
