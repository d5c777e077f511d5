#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "anirabi/analytic.hpp"
#include "anirabi/linalg.hpp"
#include "anirabi/model.hpp"
#include "anirabi/oracle.hpp"
#include "anirabi/special_functions.hpp"

namespace {

const anirabi::ModelParams kParams(1.0, 0.3, 0.1, 0.2);

void BM_Laguerre(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::laguerre(n, 1, 0.0611));
  }
}
BENCHMARK(BM_Laguerre)->Arg(4)->Arg(16)->Arg(64);

void BM_DisplacedElement(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::displaced_fock_element(n, n / 2, 0.1236));
  }
}
BENCHMARK(BM_DisplacedElement)->Arg(8)->Arg(32);

void BM_SolveLambda(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::solve_lambda(kParams, int(state.range(0))));
  }
}
BENCHMARK(BM_SolveLambda)->Arg(1)->Arg(4);

void BM_AnalyticSpectrum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::spectrum(kParams, 3));
  }
}
BENCHMARK(BM_AnalyticSpectrum);

anirabi::DenseSymmetricMatrix random_matrix(int dim) {
  std::mt19937 rng(42u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  anirabi::DenseSymmetricMatrix a(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) a.set(i, j, dist(rng));
  }
  return a;
}

void BM_Eigenvalues(benchmark::State& state) {
  const anirabi::DenseSymmetricMatrix a = random_matrix(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::eigenvalues(a));
  }
}
BENCHMARK(BM_Eigenvalues)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Eigensolve(benchmark::State& state) {
  const anirabi::DenseSymmetricMatrix a = random_matrix(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::eigensolve(a));
  }
}
BENCHMARK(BM_Eigensolve)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_LabeledSpectrum(benchmark::State& state) {
  const anirabi::TruncatedSpace space{int(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::labeled_spectrum(kParams, space, 7));
  }
}
BENCHMARK(BM_LabeledSpectrum)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_Wavefunction(benchmark::State& state) {
  const anirabi::AnalyticLevel level = anirabi::ground_energy(kParams);
  for (auto _ : state) {
    benchmark::DoNotOptimize(anirabi::wavefunction(kParams, level, int(state.range(0))));
  }
}
BENCHMARK(BM_Wavefunction)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
