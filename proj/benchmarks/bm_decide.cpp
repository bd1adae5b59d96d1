#include <benchmark/benchmark.h>

#include <random>

#include "rigikit/decide.hpp"
#include "rigikit/realize.hpp"
#include "rigikit/reduce.hpp"

using namespace rigikit;

namespace {

// Minimally rigid graphs with a few extra direction edges, so the reduction
// has something to do.
std::vector<MixedGraph> thickened(std::size_t n, std::size_t extra) {
  std::vector<MixedGraph> out;
  std::mt19937_64 rng(n * 31 + extra);
  for (std::uint64_t s = 0; s < 16; ++s) {
    const MixedGraph g = random_minimally_rigid(n, s, 2 + s % (2 * n - 4));
    std::vector<Edge> add;
    for (std::size_t k = 0; k < extra; ++k) {
      const VertexId u = rng() % n;
      VertexId v = rng() % (n - 1);
      if (v >= u) ++v;
      add.push_back(Edge{std::min(u, v), std::max(u, v), EdgeKind::Direction});
    }
    out.push_back(g.with_edges(add));
  }
  return out;
}

}  // namespace

static void BM_Decide(benchmark::State& state) {
  const auto graphs = thickened(static_cast<std::size_t>(state.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide_global_rigidity(graphs[i++ % graphs.size()]).answer);
}
BENCHMARK(BM_Decide)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_ReduceFully(benchmark::State& state) {
  const auto graphs = thickened(static_cast<std::size_t>(state.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_fully(graphs[i++ % graphs.size()]).steps.size());
}
BENCHMARK(BM_ReduceFully)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_ConditionsReport(benchmark::State& state) {
  const auto graphs = thickened(static_cast<std::size_t>(state.range(0)), 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(conditions_report(graphs[i++ % graphs.size()]).rank);
}
BENCHMARK(BM_ConditionsReport)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);
