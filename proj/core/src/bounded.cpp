#include "rigikit/bounded.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigikit/detail/union_find.hpp"
#include "rigikit/modular.hpp"
#include "rigikit/packing.hpp"
#include "rigikit/realize.hpp"

namespace rigikit {

MixedGraph augment(const MixedGraph& g) {
  std::vector<Edge> extra;
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Length) extra.push_back(Edge{e.u, e.v, EdgeKind::Direction});
  return g.with_edges(extra);
}

MixedGraph with_independent_directions(const MixedGraph& g, const RankOptions& options) {
  const GenericRankOracle oracle(g, options);
  EdgeSet keep = oracle.greedy_basis(g.direction_edges());
  const EdgeSet l = g.length_edges();
  keep.insert(keep.end(), l.begin(), l.end());
  std::sort(keep.begin(), keep.end());
  return g.edge_subgraph(keep);
}

bool is_bounded_by_packing(const MixedGraph& g, const RankOptions& options) {
  const Multigraph quotient = contract_length_edges(with_independent_directions(g, options));
  return spanning_tree_packing(quotient).verdict != PackingVerdict::Neither;
}

bool is_bounded_by_augmentation(const MixedGraph& g, const RankOptions& options) {
  return is_rigid(augment(g), options);
}

bool is_bounded(const MixedGraph& g, const RankOptions& options) {
  const bool value = is_bounded_by_packing(g, options);
#ifndef NDEBUG
  if (value != is_bounded_by_augmentation(g, options))
    throw std::logic_error("is_bounded: packing and augmentation routes disagree");
#endif
  return value;
}

std::vector<VertexSet> BoundedDecomposition::nontrivial_blocks() const {
  std::vector<VertexSet> out;
  for (const VertexSet& b : blocks)
    if (b.size() >= 2) out.push_back(b);
  return out;
}

BoundedDecomposition bounded_components(const MixedGraph& g, const RankOptions& options) {
  const Multigraph q = contract_length_edges(with_independent_directions(g, options));
  const std::size_t n = q.vertex_count();
  const std::size_t cols = 2 * n;

  detail::UnionFind uf(n);
  if (q.edge_count() > 0) {
    const unsigned trials = std::max(1u, options.trials);
    std::size_t best_rank = 0;
    std::optional<modp::RowSpace> best_space;
    std::optional<modp::Sampler> best_sampler;
    for (unsigned t = 0; t < trials; ++t) {
      modp::Sampler sampler(modp::derive_seed(options.seed, 0x100 + t));
      std::vector<ModPoint> vectors(q.edge_count());
      for (auto& v : vectors) v = {sampler.next(), sampler.next()};
      modp::RowSpace space(cols);
      for (const auto& row : frame_rows_mod_p(q, vectors)) space.insert(row);
      if (!best_space || space.rank() > best_rank) {
        best_rank = space.rank();
        best_space = std::move(space);
        best_sampler = sampler;
      }
    }
    auto fresh_row = [&](VertexId a, VertexId b) {
      modp::Row r(cols, 0);
      const std::uint64_t x = best_sampler->next();
      const std::uint64_t y = best_sampler->next();
      r[2 * a] = x;
      r[2 * a + 1] = y;
      r[2 * b] = modp::neg(x);
      r[2 * b + 1] = modp::neg(y);
      return r;
    };
    for (const MultiEdge& e : q.edges()) {
      if (uf.same(e.u, e.v)) continue;
      if (best_space->spans(fresh_row(e.u, e.v)) && best_space->spans(fresh_row(e.u, e.v))) uf.unite(e.u, e.v);
    }
  }

  BoundedDecomposition out;
  for (const auto& cls : uf.classes()) {
    VertexSet block;
    for (std::size_t x : cls) {
      const VertexSet& m = q.members(x);
      block.insert(block.end(), m.begin(), m.end());
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace rigikit
