#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rigikit {

enum class EdgeKind : std::uint8_t { Direction, Length };

std::string_view to_string(EdgeKind kind);

/// Vertices are addressed by their position in the (lexicographically
/// sorted) vertex list of the owning graph.
using VertexId = std::size_t;
using EdgeIndex = std::size_t;

/// Sorted, duplicate-free index sets.
using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<EdgeIndex>;

/// Canonical edge: u < v always. Ordering is (u, v, kind), which is also the
/// order of the edge list of a MixedGraph.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeKind kind = EdgeKind::Direction;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An edge spelled with vertex names; used at API boundaries and in traces
/// that outlive the graph they were computed on.
struct NamedEdge {
  std::string u;
  std::string v;
  EdgeKind kind = EdgeKind::Direction;

  friend auto operator<=>(const NamedEdge&, const NamedEdge&) = default;
};

/// G = (V; D, L). At most one edge of each kind per vertex pair, no loops.
/// Immutable once built; every derived graph is a new value.
class MixedGraph {
 public:
  MixedGraph() = default;

  /// Validates and canonicalises: vertex names are sorted, edges are
  /// oriented min->max and sorted. Throws InputError on a loop, an
  /// undeclared endpoint, a repeated vertex name or a same-kind parallel
  /// edge.
  MixedGraph(std::vector<std::string> vertex_names, const std::vector<NamedEdge>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t direction_count() const noexcept;
  std::size_t length_count() const noexcept { return edges_.size() - direction_count(); }

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b, EdgeKind kind) const;
  std::optional<EdgeIndex> find_edge(const NamedEdge& e) const;

  EdgeSet all_edges() const;
  EdgeSet direction_edges() const;
  EdgeSet length_edges() const;

  /// Vertices touched by the given edges.
  VertexSet vertices_of(const EdgeSet& edges) const;
  /// Number of edges of `edges` that are direction edges.
  std::size_t count_direction(const EdgeSet& edges) const;

  /// Same vertex set, only the listed edges.
  MixedGraph edge_subgraph(const EdgeSet& keep) const;
  MixedGraph without_edge(EdgeIndex e) const;
  /// G[U], vertex names kept.
  MixedGraph induced(const VertexSet& keep) const;
  /// Subgraph induced by the edges, on V(edges) only.
  MixedGraph spanned_by(const EdgeSet& edges) const;
  /// Adds edges (skipping ones already present). Names must exist.
  MixedGraph with_edges(const std::vector<Edge>& extra) const;

  NamedEdge named(EdgeIndex e) const;
  NamedEdge named(const Edge& e) const;
  std::vector<std::string> names_of(const VertexSet& vs) const;
  std::vector<NamedEdge> named(const EdgeSet& es) const;

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  struct Unchecked {};
  MixedGraph(Unchecked, std::vector<std::string> names, std::vector<Edge> edges);

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

/// Undirected multigraph produced by contraction. Every vertex remembers the
/// set of original vertices it stands for; every edge remembers its kind and
/// the originating edge index (if any).
struct MultiEdge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeKind kind = EdgeKind::Direction;
  std::optional<EdgeIndex> origin;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);
  explicit Multigraph(std::vector<VertexSet> members);

  /// Loops are dropped; returns false in that case.
  bool add_edge(VertexId u, VertexId v, EdgeKind kind = EdgeKind::Direction,
                std::optional<EdgeIndex> origin = std::nullopt);

  std::size_t vertex_count() const noexcept { return members_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<MultiEdge>& edges() const noexcept { return edges_; }
  const VertexSet& members(VertexId v) const { return members_.at(v); }
  const std::vector<VertexSet>& all_members() const noexcept { return members_; }

 private:
  std::vector<VertexSet> members_;
  std::vector<MultiEdge> edges_;
};

/// A 2-vertex cut {u, v} and the vertex sets of the components of G - {u, v}.
struct Separation {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<VertexSet> sides;
};

/// G / G[U]. Throws PreconditionError if U is empty or not within V.
Multigraph contract_subgraph(const MixedGraph& g, const VertexSet& u);

/// G / L: each component of (V, L) becomes one vertex, direction edges kept.
Multigraph contract_length_edges(const MixedGraph& g);

struct ConnectivityResult {
  bool value = true;
  std::optional<VertexId> cut_vertex;
  /// When the graph is disconnected: the vertex set of one component.
  std::optional<VertexSet> component;
};

/// Ignores edge kinds. Graphs with at most one vertex count as 2-connected.
ConnectivityResult is_2connected(const MixedGraph& g);

struct BalanceResult {
  bool value = true;
  std::optional<Separation> separation;
  /// Index into separation->sides of the side without a direction edge.
  std::optional<std::size_t> deficient_side;
};

/// Every side of every 2-separation must hold a direction edge other than
/// one joining the cut pair.
BalanceResult is_direction_balanced(const MixedGraph& g);

/// Vertex sets of the connected components of G - removed (kinds ignored),
/// ordered by smallest member.
std::vector<VertexSet> components_without(const MixedGraph& g, const VertexSet& removed);

}  // namespace rigikit
