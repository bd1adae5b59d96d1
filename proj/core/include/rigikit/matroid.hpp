#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rigikit/graph.hpp"
#include "rigikit/modular.hpp"

namespace rigikit {

/// Randomness for the algebraic rank oracle. Every trial evaluates the
/// rigidity matrix at fresh uniform points of the prime field; ranks are
/// maximised over trials.
struct RankOptions {
  std::uint64_t seed = 0;
  unsigned trials = 3;
};

/// Rigidity-matrix rows of G over the prime field, one matrix per trial.
/// Immutable after construction.
class GenericRankOracle {
 public:
  explicit GenericRankOracle(MixedGraph g, RankOptions options = {});

  const MixedGraph& graph() const noexcept { return graph_; }
  std::size_t trial_count() const noexcept { return trials_.size(); }

  std::size_t rank() const;
  std::size_t rank(const EdgeSet& f) const;
  bool is_independent(const EdgeSet& f) const { return rank(f) == f.size(); }

  /// Greedy independent subset of `order`, scanned in the given order, in the
  /// trial that realises the rank of `order`. Independence of the result is
  /// certain: full row rank at one point implies generic independence.
  EdgeSet greedy_basis(const EdgeSet& order) const;

  /// The unique circuit inside I + e, for I independent and I + e dependent.
  /// Read off the linear dependency among the rows at a point where I is
  /// independent. Throws PreconditionError if I + e is independent there.
  EdgeSet circuit_of(const EdgeSet& independent, EdgeIndex e) const;

  const std::vector<modp::Row>& rows(std::size_t trial) const { return trials_.at(trial); }

 private:
  std::size_t trial_rank(std::size_t t, const EdgeSet& f) const;

  MixedGraph graph_;
  std::vector<std::vector<modp::Row>> trials_;
};

std::size_t generic_rank(const MixedGraph& g, const RankOptions& options = {});
std::size_t generic_rank(const MixedGraph& g, const EdgeSet& f, const RankOptions& options = {});
bool is_independent(const MixedGraph& g, const EdgeSet& f, const RankOptions& options = {});
/// rank = 2|V| - 2; a single vertex is rigid.
bool is_rigid(const MixedGraph& g, const RankOptions& options = {});

struct RedundancyResult {
  bool value = false;
  bool rigid = false;
  /// First edge in canonical order whose removal destroys rigidity.
  std::optional<EdgeIndex> failing_edge;
};

RedundancyResult is_redundantly_rigid(const MixedGraph& g, const RankOptions& options = {});

/// Circuit inside B + e. Throws PreconditionError if e is in B or B is not
/// a basis of M(G).
EdgeSet fundamental_circuit(const MixedGraph& g, const EdgeSet& basis, EdgeIndex e,
                            const RankOptions& options = {});

/// Edge classes of the connected components of M(G), ordered by smallest
/// member. Coloops are singletons.
std::vector<EdgeSet> m_components(const MixedGraph& g, const RankOptions& options = {});
/// One M-component; graphs with at most one edge count as M-connected.
bool is_m_connected(const MixedGraph& g, const RankOptions& options = {});

struct DirectionIndependence {
  bool independent = true;
  /// First direction edge (canonical order) that closes a circuit inside D.
  std::optional<EdgeIndex> edge;
  /// That circuit; it is direction-pure.
  std::optional<EdgeSet> circuit;
};

DirectionIndependence direction_independent(const MixedGraph& g, const RankOptions& options = {});

/// Everything about M(G) computed up front from one greedy basis.
struct MatroidView {
  MixedGraph graph;
  std::size_t rank = 0;
  EdgeSet basis;
  /// Non-basis edge with its fundamental circuit, in canonical edge order.
  std::vector<std::pair<EdgeIndex, EdgeSet>> fundamental_circuits;
  std::vector<EdgeSet> components;
  /// Basis edges lying in no circuit.
  EdgeSet coloops;

  static MatroidView build(const MixedGraph& g, const RankOptions& options = {});
  bool rigid() const { return graph.vertex_count() == 0 || rank == 2 * graph.vertex_count() - 2; }
};

/// True iff the edge set is neither all direction nor all length edges.
bool is_mixed(const MixedGraph& g, const EdgeSet& f);

}  // namespace rigikit
