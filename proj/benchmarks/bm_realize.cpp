#include <benchmark/benchmark.h>

#include "rigikit/matroid.hpp"
#include "rigikit/realize.hpp"

using namespace rigikit;

static void BM_ExactRigidityRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MixedGraph g = random_minimally_rigid(n, n, n);
  const Framework p = random_generic_framework(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_rank(rigidity_matrix(p)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactRigidityRank)->RangeMultiplier(2)->Range(4, 32)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_RealizeFromSlopes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MixedGraph with_length = random_minimally_rigid(n, n + 5, 1);
  const MixedGraph g = with_length.without_edge(with_length.length_edges().front());
  const Framework truth = random_generic_framework(g, 3);
  SlopeInstance in;
  in.graph = g;
  for (const auto& s : measurements(truth).values) in.slopes.push_back(*s);
  in.x0 = 0;
  in.y0 = 1;
  in.z0 = 0;
  in.t2 = squared_norm(truth.at(0) - truth.at(1));
  for (auto _ : state) benchmark::DoNotOptimize(realize_from_slopes(in).coords.size());
}
BENCHMARK(BM_RealizeFromSlopes)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);
