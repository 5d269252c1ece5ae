#include <benchmark/benchmark.h>

#include "mgeo/case.hpp"
#include "mgeo/inequalities.hpp"
#include "mgeo/sweep.hpp"

namespace {

using namespace mgeo;

CompiledCase compiled(const char* name) { return compile_case(find_example(name)->config); }

void BM_Jet2(benchmark::State& state) {
  const CompiledCase c = compiled("sphere-times-sphere");
  const std::vector<double> u = {1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(jet2(c.spec, u));
}
BENCHMARK(BM_Jet2);

void BM_PointData(benchmark::State& state) {
  const CompiledCase c = compiled("sphere-times-sphere");
  const std::vector<double> u = {1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(point_data(c.spec, u));
}
BENCHMARK(BM_PointData);

void BM_Bundle(benchmark::State& state) {
  const CompiledCase c = compiled("torus-in-flat");
  const std::vector<double> u = {0.5, 1.0};
  for (auto _ : state) {
    const SubmanifoldPointData pd = point_data(c.spec, u);
    const auto [D1, D2] = distributions_at(c, pd);
    benchmark::DoNotOptimize(make_bundle(c.spec, pd, D1, D2));
  }
}
BENCHMARK(BM_Bundle);

// Whole verify pass at one point, all applicable theorems.
void BM_VerifyPoint(benchmark::State& state) {
  const CompiledCase c = compiled("flat-invariant-3space");
  const std::vector<double> u = {0.1, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(run_point(c, u, 0, {true, false}));
}
BENCHMARK(BM_VerifyPoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
