#include "symbath/dynamics.hpp"

#include "symbath/asymptotic.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace symbath;

const EnvironmentParams kParams{1.0, 0.5, 1.0, 1.0};

void BM_Vectorize(benchmark::State& state) {
  const auto gen = build_generator(kParams, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vectorize(gen));
  }
}
BENCHMARK(BM_Vectorize)->Arg(1)->Arg(2)->Arg(3);

void BM_Propagator(benchmark::State& state) {
  const Superoperator sup = vectorize(build_generator(kParams, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(sup, 1.0));
  }
}
BENCHMARK(BM_Propagator)->Arg(1)->Arg(2)->Arg(3);

void BM_AsymptoticState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Superoperator sup = vectorize(build_generator(kParams, n));
  const DensityMatrix rho0 = alpha_family_state(0.1, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(asymptotic_state(sup, rho0));
  }
}
BENCHMARK(BM_AsymptoticState)->Arg(2)->Arg(3);

void BM_TimeAverage(benchmark::State& state) {
  const Superoperator sup = vectorize(build_generator(kParams, 2));
  Mat t2 = Mat::Zero(4, 4);
  for (int i = 1; i <= 3; ++i) t2 += kron(pauli(i), pauli(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_average(sup, t2, 200.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_TimeAverage)->Arg(100)->Arg(400);

}  // namespace
