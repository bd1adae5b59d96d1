#include <benchmark/benchmark.h>

#include <random>

#include "rigikit/bounded.hpp"
#include "rigikit/corpus.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/oracle.hpp"
#include "rigikit/packing.hpp"

using namespace rigikit;

namespace {

std::vector<MixedGraph> graphs_on(std::size_t n, std::size_t max_edges) {
  return corpus::random_mixed_batch(n * 1000 + max_edges, 64, n, n, max_edges);
}

}  // namespace

static void BM_GenericRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graphs = graphs_on(n, 4 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(graphs[i++ % graphs.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GenericRank)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_RankByCounts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graphs = graphs_on(n, 20);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::rank_by_counts(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_RankByCounts)->DenseRange(4, 10, 2);

static void BM_MatroidView(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graphs = graphs_on(n, 3 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(MatroidView::build(graphs[i++ % graphs.size()]).components.size());
}
BENCHMARK(BM_MatroidView)->RangeMultiplier(2)->Range(4, 32);

static void BM_SpanningTreePacking(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(n);
  std::vector<Multigraph> ms;
  for (int k = 0; k < 64; ++k) ms.push_back(corpus::random_multigraph(rng, n, 2 * n + k % 4));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_packing(ms[i++ % ms.size()]).verdict);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpanningTreePacking)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_BoundedComponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graphs = graphs_on(n, 2 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bounded_components(graphs[i++ % graphs.size()]).blocks.size());
}
BENCHMARK(BM_BoundedComponents)->RangeMultiplier(2)->Range(4, 32);
