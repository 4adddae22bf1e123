#include <benchmark/benchmark.h>

#include "catgeo/estimate.hpp"
#include "catgeo/kcurve.hpp"
#include "catgeo/scenarios.hpp"

namespace {

using catgeo::Execution;

const catgeo::Scenario& sphere() {
  static const catgeo::Scenario sc = [] {
    catgeo::ScenarioSpec spec;
    spec.name = "sphere_E3";
    spec.n = 1000;
    spec.seed = 42;
    return catgeo::generate(spec);
  }();
  return sc;
}

void BM_Apsp(benchmark::State& state) {
  const auto ex = state.range(0) ? Execution::parallel : Execution::serial;
  const auto& space = sphere().space;
  catgeo::Graph g;
  g.offsets.assign(space.size() + 1, 0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j)
      if (j != i && space.ambient(i, j) <= space.eps()) {
        g.targets.push_back(static_cast<std::int32_t>(j));
        g.weights.push_back(space.ambient(i, j));
      }
    g.offsets[i + 1] = g.targets.size();
  }
  std::vector<double> dist;
  std::vector<std::int32_t> pred;
  for (auto _ : state) {
    catgeo::all_pairs_shortest_paths(g, dist, pred, ex);
    benchmark::DoNotOptimize(dist.data());
  }
}
BENCHMARK(BM_Apsp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Extrinsic(benchmark::State& state) {
  catgeo::ExtrinsicOptions opts;
  opts.execution = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(catgeo::extrinsic_curvature_estimate(sphere().space, opts).value);
}
BENCHMARK(BM_Extrinsic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CatBound(benchmark::State& state) {
  catgeo::CatOptions opts;
  opts.triangles = 200;
  opts.execution = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(catgeo::cat_upper_bound_estimate(sphere().space, opts).value);
}
BENCHMARK(BM_CatBound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
