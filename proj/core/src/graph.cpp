#include "rigikit/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "rigikit/detail/union_find.hpp"
#include "rigikit/errors.hpp"

namespace rigikit {

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::Direction ? "dir" : "len";
}

namespace {

void check_sorted_unique(const std::vector<Edge>& edges, std::size_t n) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= e.v || e.v >= n) throw std::logic_error("non-canonical edge");
    if (i > 0 && !(edges[i - 1] < e)) throw std::logic_error("unsorted edge list");
  }
}

}  // namespace

MixedGraph::MixedGraph(std::vector<std::string> vertex_names, const std::vector<NamedEdge>& edges) {
  std::vector<std::string> sorted = vertex_names;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw InputError("vertices", "duplicate vertex \"" + *dup + "\"");
  }
  names_ = std::move(sorted);

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const NamedEdge& ne = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    auto a = find_vertex(ne.u);
    auto b = find_vertex(ne.v);
    if (!a) throw InputError(where, "edge endpoint \"" + ne.u + "\" is not a declared vertex");
    if (!b) throw InputError(where, "edge endpoint \"" + ne.v + "\" is not a declared vertex");
    if (*a == *b) throw InputError(where, "loop edge at \"" + ne.u + "\"");
    canon.push_back(Edge{std::min(*a, *b), std::max(*a, *b), ne.kind});
  }
  std::vector<std::size_t> order(canon.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return canon[x] < canon[y]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (canon[order[k - 1]] == canon[order[k]]) {
      const Edge& e = canon[order[k]];
      throw InputError("edges[" + std::to_string(order[k]) + "]",
                       std::string("parallel ") +
                           (e.kind == EdgeKind::Length ? "length" : "direction") + " edges on {" +
                           names_[e.u] + "," + names_[e.v] + "}");
    }
  }
  edges_.reserve(canon.size());
  for (std::size_t idx : order) edges_.push_back(canon[idx]);
}

MixedGraph::MixedGraph(Unchecked, std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  check_sorted_unique(edges_, names_.size());
}

std::size_t MixedGraph::direction_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.kind == EdgeKind::Direction; }));
}

std::optional<VertexId> MixedGraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::optional<EdgeIndex> MixedGraph::find_edge(VertexId a, VertexId b, EdgeKind kind) const {
  const Edge key{std::min(a, b), std::max(a, b), kind};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::optional<EdgeIndex> MixedGraph::find_edge(const NamedEdge& e) const {
  auto a = find_vertex(e.u);
  auto b = find_vertex(e.v);
  if (!a || !b || *a == *b) return std::nullopt;
  return find_edge(*a, *b, e.kind);
}

EdgeSet MixedGraph::all_edges() const {
  EdgeSet out(edges_.size());
  std::iota(out.begin(), out.end(), EdgeIndex{0});
  return out;
}

EdgeSet MixedGraph::direction_edges() const {
  EdgeSet out;
  for (EdgeIndex i = 0; i < edges_.size(); ++i)
    if (edges_[i].kind == EdgeKind::Direction) out.push_back(i);
  return out;
}

EdgeSet MixedGraph::length_edges() const {
  EdgeSet out;
  for (EdgeIndex i = 0; i < edges_.size(); ++i)
    if (edges_[i].kind == EdgeKind::Length) out.push_back(i);
  return out;
}

VertexSet MixedGraph::vertices_of(const EdgeSet& es) const {
  std::vector<bool> seen(names_.size(), false);
  for (EdgeIndex i : es) {
    seen[edges_.at(i).u] = true;
    seen[edges_.at(i).v] = true;
  }
  VertexSet out;
  for (VertexId v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::size_t MixedGraph::count_direction(const EdgeSet& es) const {
  return static_cast<std::size_t>(std::count_if(es.begin(), es.end(), [&](EdgeIndex i) {
    return edges_.at(i).kind == EdgeKind::Direction;
  }));
}

MixedGraph MixedGraph::edge_subgraph(const EdgeSet& keep) const {
  std::vector<Edge> es;
  es.reserve(keep.size());
  for (EdgeIndex i : keep) es.push_back(edges_.at(i));
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return MixedGraph(Unchecked{}, names_, std::move(es));
}

MixedGraph MixedGraph::without_edge(EdgeIndex e) const {
  std::vector<Edge> es = edges_;
  es.erase(es.begin() + static_cast<std::ptrdiff_t>(e));
  return MixedGraph(Unchecked{}, names_, std::move(es));
}

MixedGraph MixedGraph::induced(const VertexSet& keep) const {
  std::vector<VertexId> remap(names_.size(), names_.size());
  std::vector<std::string> names;
  VertexSet sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    remap.at(v) = names.size();
    names.push_back(names_[v]);
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (remap[e.u] < names.size() && remap[e.v] < names.size())
      es.push_back(Edge{remap[e.u], remap[e.v], e.kind});
  }
  // Relabelling is monotone, so order is preserved.
  return MixedGraph(Unchecked{}, std::move(names), std::move(es));
}

MixedGraph MixedGraph::spanned_by(const EdgeSet& es) const {
  return edge_subgraph(es).induced(vertices_of(es));
}

MixedGraph MixedGraph::with_edges(const std::vector<Edge>& extra) const {
  std::vector<Edge> es = edges_;
  for (Edge e : extra) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v || e.v >= names_.size()) throw PreconditionError("with_edges: invalid edge");
    es.push_back(e);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return MixedGraph(Unchecked{}, names_, std::move(es));
}

NamedEdge MixedGraph::named(EdgeIndex e) const { return named(edges_.at(e)); }

NamedEdge MixedGraph::named(const Edge& e) const {
  return NamedEdge{names_.at(e.u), names_.at(e.v), e.kind};
}

std::vector<std::string> MixedGraph::names_of(const VertexSet& vs) const {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(names_.at(v));
  return out;
}

std::vector<NamedEdge> MixedGraph::named(const EdgeSet& es) const {
  std::vector<NamedEdge> out;
  out.reserve(es.size());
  for (EdgeIndex e : es) out.push_back(named(e));
  return out;
}

Multigraph::Multigraph(std::size_t vertex_count) : members_(vertex_count) {
  for (VertexId v = 0; v < vertex_count; ++v) members_[v] = {v};
}

Multigraph::Multigraph(std::vector<VertexSet> members) : members_(std::move(members)) {}

bool Multigraph::add_edge(VertexId u, VertexId v, EdgeKind kind, std::optional<EdgeIndex> origin) {
  if (u >= members_.size() || v >= members_.size())
    throw PreconditionError("Multigraph::add_edge: vertex out of range");
  if (u == v) return false;
  edges_.push_back(MultiEdge{std::min(u, v), std::max(u, v), kind, origin});
  return true;
}

namespace {

/// Builds the quotient multigraph for a vertex partition given as class ids.
Multigraph quotient(const MixedGraph& g, detail::UnionFind& uf, bool keep_lengths) {
  auto classes = uf.classes();
  std::vector<VertexId> image(g.vertex_count());
  std::vector<VertexSet> members;
  members.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t v : classes[c]) image[v] = c;
    members.emplace_back(classes[c].begin(), classes[c].end());
  }
  Multigraph m(std::move(members));
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (!keep_lengths && e.kind == EdgeKind::Length) continue;
    m.add_edge(image[e.u], image[e.v], e.kind, i);
  }
  return m;
}

}  // namespace

Multigraph contract_subgraph(const MixedGraph& g, const VertexSet& u) {
  if (u.empty()) throw PreconditionError("contract_subgraph: empty vertex set");
  detail::UnionFind uf(g.vertex_count());
  for (VertexId v : u) {
    if (v >= g.vertex_count()) throw PreconditionError("contract_subgraph: vertex not in graph");
    uf.unite(u.front(), v);
  }
  return quotient(g, uf, true);
}

Multigraph contract_length_edges(const MixedGraph& g) {
  detail::UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Length) uf.unite(e.u, e.v);
  return quotient(g, uf, false);
}

std::vector<VertexSet> components_without(const MixedGraph& g, const VertexSet& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (VertexId v : removed) gone.at(v) = true;
  detail::UnionFind uf(n);
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) uf.unite(e.u, e.v);
  std::vector<VertexSet> out;
  for (auto& cls : uf.classes()) {
    if (gone[cls.front()]) continue;  // removed vertices are singleton classes
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

ConnectivityResult is_2connected(const MixedGraph& g) {
  ConnectivityResult r;
  if (g.vertex_count() <= 1) return r;
  auto whole = components_without(g, {});
  if (whole.size() > 1) {
    r.value = false;
    r.component = whole.front();
    return r;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (components_without(g, {v}).size() > 1) {
      r.value = false;
      r.cut_vertex = v;
      return r;
    }
  }
  return r;
}

BalanceResult is_direction_balanced(const MixedGraph& g) {
  BalanceResult r;
  const std::size_t n = g.vertex_count();
  if (n < 4) return r;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      auto sides = components_without(g, {u, v});
      if (sides.size() < 2) continue;
      std::vector<std::size_t> side_of(n, sides.size());
      for (std::size_t s = 0; s < sides.size(); ++s)
        for (VertexId x : sides[s]) side_of[x] = s;
      std::vector<bool> has_direction(sides.size(), false);
      for (const Edge& e : g.edges()) {
        if (e.kind != EdgeKind::Direction) continue;
        if (e.u == u && e.v == v) continue;  // joins the cut pair
        // An edge not between u and v has at least one endpoint in a side.
        const std::size_t s = side_of[e.u] < sides.size() ? side_of[e.u] : side_of[e.v];
        if (s < sides.size()) has_direction[s] = true;
      }
      for (std::size_t s = 0; s < sides.size(); ++s) {
        if (!has_direction[s]) {
          r.value = false;
          r.separation = Separation{u, v, std::move(sides)};
          r.deficient_side = s;
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace rigikit
