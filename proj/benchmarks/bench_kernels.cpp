#include <benchmark/benchmark.h>

#include <vector>

#include "skde/estimator.hpp"
#include "skde/kernels.hpp"
#include "skde/poly.hpp"
#include "skde/rng.hpp"
#include "skde/simulate.hpp"

using namespace skde;

namespace {

std::vector<double> random_arguments(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> t(n);
  for (auto& v : t) v = 2.0 * rng.next_double() - 1.0;
  return t;
}

void BM_LegendreAll(benchmark::State& state) {
  const int trunc = static_cast<int>(state.range(0));
  const auto args = random_arguments(64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    auto seq = legendre_all(args[i++ % args.size()], trunc);
    benchmark::DoNotOptimize(seq.data());
  }
  state.SetItemsProcessed(state.iterations() * (trunc + 1));
}
BENCHMARK(BM_LegendreAll)->Arg(10)->Arg(50)->Arg(75)->Arg(100)->Arg(200);

void BM_SphereKernelEval(benchmark::State& state) {
  const int trunc = static_cast<int>(state.range(0));
  const auto kernel = build_sphere_kernel(g_sigma(6), 0.05, trunc);
  const auto args = random_arguments(64, 2);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_sphere_kernel(kernel, args[i++ % args.size()]));
  state.SetItemsProcessed(state.iterations() * (trunc + 1));
}
BENCHMARK(BM_SphereKernelEval)->Arg(10)->Arg(50)->Arg(75)->Arg(100)->Arg(200);

void BM_EstimatorEvaluate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = sample_uniform_sphere(n, 3);
  const auto est = fit(pts, g_sigma(6), 0.05, 75);
  const auto where = sample_uniform_sphere(64, 4);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(est.evaluate(where[i++ % where.size()]));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EstimatorEvaluate)->Arg(200)->Arg(1500);

void BM_EvaluateGrid(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  const auto pts = sample_uniform_sphere(200, 5);
  const auto est = fit(pts, g_sigma(6), 0.1, 75);
  for (auto _ : state) {
    auto field = evaluate_grid(est, 30, 60, true, 1e-3, threads);
    benchmark::DoNotOptimize(field.density.data());
  }
  state.SetItemsProcessed(state.iterations() * 30 * 60);
}
BENCHMARK(BM_EvaluateGrid)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VmfMixtureSample(benchmark::State& state) {
  const VmfMixture mixture({{UnitVector3(0, 0, 1), 60.0, 0.5},
                            {UnitVector3(1, 0, 0), 45.0, 0.3},
                            {UnitVector3(0, 1, 0), 80.0, 0.2}});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto pts = sample_vmf_mixture(mixture, 1000, ++seed);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_VmfMixtureSample);

}  // namespace

BENCHMARK_MAIN();
