// Serial reference vs OpenMP kernels on random clouds.
#include <random>

#include <benchmark/benchmark.h>

#include "conesep/kernels.hpp"

using namespace conesep;

namespace {

PointCloud cloud(int dim, int n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  PointCloud P(dim, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i) P(i, j) = g(rng);
  return P;
}

template <auto Fn>
void BM_DotExtrema(benchmark::State& state) {
  const PointCloud P = cloud(3, static_cast<int>(state.range(0)));
  const Vec c = Vec::Ones(3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(P, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_MarginScan(benchmark::State& state) {
  const PointCloud P = cloud(3, static_cast<int>(state.range(0)));
  Vec xs(3);
  xs << -1.0, -0.5, 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(P, xs, 0.4, NormMode::L2, kernels::Side::Outside, 1e-7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_Normalize(benchmark::State& state) {
  const PointCloud P = cloud(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PointCloud Q = P;
    Fn(Q, NormMode::L1);
    benchmark::DoNotOptimize(Q.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_DotExtrema<kernels::dot_extrema_serial>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_DotExtrema<kernels::dot_extrema_parallel>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_MarginScan<kernels::margin_scan_serial>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_MarginScan<kernels::margin_scan_parallel>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Normalize<kernels::normalize_columns_serial>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Normalize<kernels::normalize_columns_parallel>)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
