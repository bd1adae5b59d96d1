#include "rigikit/matroid.hpp"

#include <algorithm>

#include "rigikit/detail/union_find.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/realize.hpp"

namespace rigikit {

namespace {

/// Echelon elimination that remembers which input rows each stored row is
/// built from, so a row that reduces to zero yields its dependency.
class TaggedElimination {
 public:
  TaggedElimination(std::size_t columns, std::size_t tags) : columns_(columns), tags_(tags) {}

  /// Returns the support of the dependency (including `tag`) if the row is
  /// in the current span, otherwise stores it and returns nothing.
  std::optional<EdgeSet> insert(modp::Row row, std::size_t tag) {
    modp::Row t(tags_, 0);
    t[tag] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint64_t f = row[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t c = pivots_[i]; c < columns_; ++c)
        if (rows_[i][c] != 0) row[c] = modp::sub(row[c], modp::mul(f, rows_[i][c]));
      for (std::size_t c = 0; c < tags_; ++c)
        if (tag_rows_[i][c] != 0) t[c] = modp::sub(t[c], modp::mul(f, tag_rows_[i][c]));
    }
    std::size_t pivot = 0;
    while (pivot < columns_ && row[pivot] == 0) ++pivot;
    if (pivot == columns_) {
      EdgeSet support;
      for (std::size_t c = 0; c < tags_; ++c)
        if (t[c] != 0) support.push_back(c);
      return support;
    }
    const std::uint64_t inv = modp::inverse(row[pivot]);
    for (std::size_t c = pivot; c < columns_; ++c) row[c] = modp::mul(row[c], inv);
    for (auto& x : t) x = modp::mul(x, inv);
    rows_.push_back(std::move(row));
    tag_rows_.push_back(std::move(t));
    pivots_.push_back(pivot);
    return std::nullopt;
  }

 private:
  std::size_t columns_;
  std::size_t tags_;
  std::vector<modp::Row> rows_;
  std::vector<modp::Row> tag_rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

GenericRankOracle::GenericRankOracle(MixedGraph g, RankOptions options) : graph_(std::move(g)) {
  const unsigned trials = std::max(1u, options.trials);
  trials_.reserve(trials);
  for (unsigned t = 0; t < trials; ++t) {
    modp::Sampler sampler(modp::derive_seed(options.seed, t));
    std::vector<ModPoint> coords(graph_.vertex_count());
    for (auto& c : coords) c = {sampler.next(), sampler.next()};
    trials_.push_back(rigidity_rows_mod_p(graph_, coords));
  }
}

std::size_t GenericRankOracle::trial_rank(std::size_t t, const EdgeSet& f) const {
  modp::RowSpace space(2 * graph_.vertex_count());
  for (EdgeIndex e : f) space.insert(trials_[t].at(e));
  return space.rank();
}

std::size_t GenericRankOracle::rank(const EdgeSet& f) const {
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials_.size(); ++t) best = std::max(best, trial_rank(t, f));
  return best;
}

std::size_t GenericRankOracle::rank() const { return rank(graph_.all_edges()); }

EdgeSet GenericRankOracle::greedy_basis(const EdgeSet& order) const {
  EdgeSet best;
  for (std::size_t t = 0; t < trials_.size(); ++t) {
    modp::RowSpace space(2 * graph_.vertex_count());
    EdgeSet basis;
    for (EdgeIndex e : order)
      if (space.insert(trials_[t].at(e))) basis.push_back(e);
    if (basis.size() > best.size()) best = std::move(basis);
  }
  return best;
}

EdgeSet GenericRankOracle::circuit_of(const EdgeSet& independent, EdgeIndex e) const {
  for (std::size_t t = 0; t < trials_.size(); ++t) {
    if (trial_rank(t, independent) != independent.size()) continue;
    TaggedElimination elim(2 * graph_.vertex_count(), graph_.edge_count());
    for (EdgeIndex b : independent) elim.insert(trials_[t][b], b);
    auto support = elim.insert(trials_[t].at(e), e);
    if (!support) throw PreconditionError("circuit_of: I + e is independent");
    return *support;
  }
  throw PreconditionError("circuit_of: edge set is not independent");
}

std::size_t generic_rank(const MixedGraph& g, const RankOptions& options) {
  return GenericRankOracle(g, options).rank();
}

std::size_t generic_rank(const MixedGraph& g, const EdgeSet& f, const RankOptions& options) {
  return GenericRankOracle(g, options).rank(f);
}

bool is_independent(const MixedGraph& g, const EdgeSet& f, const RankOptions& options) {
  return GenericRankOracle(g, options).is_independent(f);
}

bool is_rigid(const MixedGraph& g, const RankOptions& options) {
  if (g.vertex_count() <= 1) return true;
  return generic_rank(g, options) == 2 * g.vertex_count() - 2;
}

RedundancyResult is_redundantly_rigid(const MixedGraph& g, const RankOptions& options) {
  const MatroidView view = MatroidView::build(g, options);
  RedundancyResult out;
  out.rigid = view.rigid();
  if (!out.rigid) return out;
  // In a rigid graph G - e loses rigidity exactly when e is a coloop.
  if (!view.coloops.empty()) {
    out.failing_edge = view.coloops.front();
    return out;
  }
  out.value = true;
  return out;
}

EdgeSet fundamental_circuit(const MixedGraph& g, const EdgeSet& basis, EdgeIndex e,
                            const RankOptions& options) {
  if (e >= g.edge_count()) throw PreconditionError("fundamental_circuit: edge out of range");
  if (std::find(basis.begin(), basis.end(), e) != basis.end())
    throw PreconditionError("fundamental_circuit: edge lies in the basis");
  const GenericRankOracle oracle(g, options);
  if (!oracle.is_independent(basis) || basis.size() != oracle.rank())
    throw PreconditionError("fundamental_circuit: edge set is not a basis");
  return oracle.circuit_of(basis, e);
}

MatroidView MatroidView::build(const MixedGraph& g, const RankOptions& options) {
  const GenericRankOracle oracle(g, options);
  MatroidView view;
  view.graph = g;
  view.basis = oracle.greedy_basis(g.all_edges());
  view.rank = view.basis.size();

  detail::UnionFind uf(g.edge_count());
  std::vector<bool> in_circuit(g.edge_count(), false);
  std::size_t b = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (b < view.basis.size() && view.basis[b] == e) {
      ++b;
      continue;
    }
    EdgeSet c = oracle.circuit_of(view.basis, e);
    for (EdgeIndex x : c) {
      uf.unite(c.front(), x);
      in_circuit[x] = true;
    }
    view.fundamental_circuits.emplace_back(e, std::move(c));
  }
  for (EdgeIndex e : view.basis)
    if (!in_circuit[e]) view.coloops.push_back(e);
  view.components = uf.classes();
  return view;
}

std::vector<EdgeSet> m_components(const MixedGraph& g, const RankOptions& options) {
  return MatroidView::build(g, options).components;
}

bool is_m_connected(const MixedGraph& g, const RankOptions& options) {
  if (g.edge_count() <= 1) return true;
  return m_components(g, options).size() == 1;
}

DirectionIndependence direction_independent(const MixedGraph& g, const RankOptions& options) {
  const GenericRankOracle oracle(g, options);
  const EdgeSet d = g.direction_edges();
  const EdgeSet kept = oracle.greedy_basis(d);
  DirectionIndependence out;
  if (kept.size() == d.size()) return out;
  std::size_t k = 0;
  EdgeSet prefix;
  for (EdgeIndex e : d) {
    if (k < kept.size() && kept[k] == e) {
      prefix.push_back(e);
      ++k;
      continue;
    }
    out.independent = false;
    out.edge = e;
    out.circuit = oracle.circuit_of(prefix, e);
    return out;
  }
  return out;
}

bool is_mixed(const MixedGraph& g, const EdgeSet& f) {
  const std::size_t d = g.count_direction(f);
  return d != 0 && d != f.size();
}

}  // namespace rigikit
