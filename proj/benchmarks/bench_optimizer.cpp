#include <random>

#include <benchmark/benchmark.h>

#include "mgeo/invariants.hpp"

namespace {

using namespace mgeo;

Matrix symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A(i, j) = A(j, i) = N(rng);
  return A;
}

// Random shape operators in a flat ambient, n tangent and 2 normal directions.
PointGeometry geometry(int n) {
  std::mt19937_64 rng(7);
  return make_geometry(Tensor4(n + 2), {symmetric(n, rng), symmetric(n, rng)});
}

void BM_DeltaCasorati(benchmark::State& state) {
  const PointGeometry g = geometry(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_casorati(g.shape_ops, 1.0));
}
BENCHMARK(BM_DeltaCasorati)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ChenDelta(benchmark::State& state) {
  const PointGeometry g = geometry(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chen_delta(g, {2}));
}
BENCHMARK(BM_ChenDelta)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_OmegaK(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointGeometry g = geometry(n);
  for (auto _ : state) benchmark::DoNotOptimize(omega_k(g, n));
}
BENCHMARK(BM_OmegaK)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
