#pragma once

#include <vector>

#include "rigikit/graph.hpp"
#include "rigikit/matroid.hpp"

namespace rigikit {

/// G+: a direction edge added beside every length edge whose pair lacks one.
MixedGraph augment(const MixedGraph& g);

/// G with D replaced by the greedy maximal independent subset of D
/// (canonical order). Boundedness and bounded components are unchanged.
MixedGraph with_independent_directions(const MixedGraph& g, const RankOptions& options = {});

/// G/L of the direction-independent core contains two edge-disjoint
/// spanning trees.
bool is_bounded_by_packing(const MixedGraph& g, const RankOptions& options = {});
/// G+ is rigid.
bool is_bounded_by_augmentation(const MixedGraph& g, const RankOptions& options = {});

/// Packing route. Builds without NDEBUG also evaluate the augmentation route
/// and throw std::logic_error if the two disagree.
bool is_bounded(const MixedGraph& g, const RankOptions& options = {});

struct BoundedDecomposition {
  /// Vertex sets of the bounded components, ordered by smallest member.
  std::vector<VertexSet> blocks;

  std::vector<VertexSet> nontrivial_blocks() const;
};

/// Contracts L in the direction-independent core, then groups vertices of
/// G/L that are linked in the generic frame matroid: two fresh random frame
/// rows between them both lie in the span of the existing rows.
BoundedDecomposition bounded_components(const MixedGraph& g, const RankOptions& options = {});

}  // namespace rigikit
