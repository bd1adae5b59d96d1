#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

enum class PackingVerdict {
  Union,     // two edge-disjoint spanning trees partition E
  Contains,  // two edge-disjoint spanning trees exist, edges remain
  Neither,
};

std::string_view to_string(PackingVerdict v);

/// Edge indices refer to positions in Multigraph::edges(), so parallel edges
/// are distinct elements.
struct PackingResult {
  PackingVerdict verdict = PackingVerdict::Neither;
  std::optional<std::pair<EdgeSet, EdgeSet>> trees;
  /// X with i(X) >= 2|X| - 1 (only when |E| exceeds the packable size).
  std::optional<VertexSet> violator;
  /// Partition P with fewer than 2(|P| - 1) edges between its classes.
  std::optional<std::vector<VertexSet>> deficit_partition;
};

/// Two-tree packing by matroid union of two cycle matroids (breadth-first
/// augmenting exchanges). A failed search leaves a closed set S of edges
/// whose components give both certificates.
PackingResult spanning_tree_packing(const Multigraph& m);

std::size_t induced_edge_count(const Multigraph& m, const VertexSet& x);
/// Edges whose endpoints lie in different classes.
std::size_t crossing_count(const Multigraph& m, const std::vector<VertexSet>& partition);
bool is_spanning_tree(const Multigraph& m, const EdgeSet& t);

/// Re-checks every claim a result makes: the verdict matches |E| and the
/// trees, trees are spanning and disjoint, the violator and the partition
/// satisfy their inequalities.
bool verify_packing(const Multigraph& m, const PackingResult& r);

}  // namespace rigikit
