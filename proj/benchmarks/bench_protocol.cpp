#include "symbath/protocol.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace symbath;

void BM_ConcurrenceOracle(benchmark::State& state) {
  const EnvironmentParams p{1.0, 0.9, 1.0, 1.0};
  const DensityMatrix rho = reduced_protocol_state(0.2, p).state;
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_oracle(rho));
  }
}
BENCHMARK(BM_ConcurrenceOracle);

void BM_ProtocolPointAnalytic(benchmark::State& state) {
  const EnvironmentParams p{1.0, 0.9, 1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol_point(0.2, p, Method::Analytic));
  }
}
BENCHMARK(BM_ProtocolPointAnalytic);

void BM_ProtocolPointNumeric(benchmark::State& state) {
  const EnvironmentParams p{1.0, 0.9, 1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol_point(0.2, p, Method::Numeric));
  }
}
BENCHMARK(BM_ProtocolPointNumeric);

void BM_FigureSweep(benchmark::State& state) {
  const auto grid = figure_grid(1, 0.2, 0.1, 0.02);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(grid, Method::Analytic));
  }
}
BENCHMARK(BM_FigureSweep);

}  // namespace

BENCHMARK_MAIN();
