#include <benchmark/benchmark.h>

#include "coverkit/constructors.hpp"
#include "coverkit/schreier.hpp"
#include "coverkit/surface_word.hpp"

using namespace coverkit;

static void BM_Girth(benchmark::State& state) {
  const MultiGraph g = build_girth_graph(static_cast<int>(state.range(0)), 6, FillerMode::Flexible, 1).graph;
  for (auto _ : state) benchmark::DoNotOptimize(girth(g).girth);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Girth)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

static void BM_TwoFactorize(benchmark::State& state) {
  const MultiGraph g = pairing_model_sample(SamplerConfig{static_cast<int>(state.range(0)), 7});
  for (auto _ : state) benchmark::DoNotOptimize(two_factorize(g).factor1.size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoFactorize)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_MinSubgroupLength(benchmark::State& state) {
  const Certified c = build_girth_graph(static_cast<int>(state.range(0)), 5, FillerMode::Flexible, 3);
  const SchreierAction a = graph_to_action(c.graph).action;
  for (auto _ : state) benchmark::DoNotOptimize(min_subgroup_length(a, 5).length);
}
BENCHMARK(BM_MinSubgroupLength)->Arg(100)->Arg(1000);

static void BM_DehnReduce(benchmark::State& state) {
  std::string w;
  for (int i = 0; i < state.range(0); ++i) w += "xyXYabAB"[(i * 5 + i / 3) % 8];
  for (auto _ : state) benchmark::DoNotOptimize(dehn_reduce(w).size());
}
BENCHMARK(BM_DehnReduce)->Arg(64)->Arg(1024);

static void BM_BallEnumeration(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  enumerate_ball(r);  // fill the shared cache once
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(r).size());
}
BENCHMARK(BM_BallEnumeration)->DenseRange(3, 6);

BENCHMARK_MAIN();
