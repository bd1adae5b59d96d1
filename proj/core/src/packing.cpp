#include "rigikit/packing.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "rigikit/detail/union_find.hpp"

namespace rigikit {

std::string_view to_string(PackingVerdict v) {
  switch (v) {
    case PackingVerdict::Union:
      return "UNION";
    case PackingVerdict::Contains:
      return "CONTAINS";
    case PackingVerdict::Neither:
      return "NEITHER";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Forest {
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj;  // (neighbour, edge)

  explicit Forest(std::size_t n) : adj(n) {}

  /// Edges of the forest path from a to b, or nothing if a and b are in
  /// different trees.
  std::optional<EdgeSet> path(VertexId a, VertexId b) const {
    std::vector<std::size_t> via(adj.size(), kNone);
    std::vector<VertexId> from(adj.size(), kNone);
    std::vector<VertexId> stack{a};
    from[a] = a;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      if (x == b) break;
      for (auto [y, e] : adj[x]) {
        if (from[y] != kNone) continue;
        from[y] = x;
        via[y] = e;
        stack.push_back(y);
      }
    }
    if (from[b] == kNone) return std::nullopt;
    EdgeSet out;
    for (VertexId x = b; x != a; x = from[x]) out.push_back(via[x]);
    return out;
  }
};

class UnionOfTwoForests {
 public:
  explicit UnionOfTwoForests(const Multigraph& m) : m_(m), owner_(m.edge_count(), kNone) {}

  /// Tries to add e to the union; true on success.
  bool insert(std::size_t e) {
    const auto forests = build_forests();
    std::vector<std::size_t> parent(m_.edge_count(), kNone);
    std::vector<bool> seen(m_.edge_count(), false);
    std::deque<std::size_t> queue{e};
    seen[e] = true;
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < 2; ++i) {
        if (owner_[y] == i) continue;
        const MultiEdge& me = m_.edges()[y];
        auto cycle = forests[i].path(me.u, me.v);
        if (!cycle) {
          augment(y, i, parent);
          return true;
        }
        for (std::size_t z : *cycle) {
          if (seen[z]) continue;
          seen[z] = true;
          parent[z] = y;
          queue.push_back(z);
        }
      }
    }
    return false;
  }

  /// Edges reachable in the exchange graph from every unassigned edge.
  std::vector<bool> closure() const {
    const auto forests = build_forests();
    std::vector<bool> seen(m_.edge_count(), false);
    std::deque<std::size_t> queue;
    for (std::size_t e = 0; e < m_.edge_count(); ++e)
      if (owner_[e] == kNone) {
        seen[e] = true;
        queue.push_back(e);
      }
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < 2; ++i) {
        if (owner_[y] == i) continue;
        const MultiEdge& me = m_.edges()[y];
        auto cycle = forests[i].path(me.u, me.v);
        if (!cycle) continue;  // cannot happen after a failed insert
        for (std::size_t z : *cycle)
          if (!seen[z]) {
            seen[z] = true;
            queue.push_back(z);
          }
      }
    }
    return seen;
  }

  std::size_t owner(std::size_t e) const { return owner_[e]; }

 private:
  std::array<Forest, 2> build_forests() const {
    std::array<Forest, 2> f{Forest(m_.vertex_count()), Forest(m_.vertex_count())};
    for (std::size_t e = 0; e < m_.edge_count(); ++e) {
      if (owner_[e] == kNone) continue;
      const MultiEdge& me = m_.edges()[e];
      f[owner_[e]].adj[me.u].emplace_back(me.v, e);
      f[owner_[e]].adj[me.v].emplace_back(me.u, e);
    }
    return f;
  }

  // y enters forest i; each predecessor takes the place its successor left.
  void augment(std::size_t y, std::size_t i, const std::vector<std::size_t>& parent) {
    std::size_t into = i;
    for (std::size_t x = y; x != kNone; x = parent[x]) {
      const std::size_t left = owner_[x];
      owner_[x] = into;
      into = left;
    }
  }

  const Multigraph& m_;
  std::vector<std::size_t> owner_;
};

std::vector<VertexSet> components_of(const Multigraph& m, const std::vector<bool>& keep) {
  detail::UnionFind uf(m.vertex_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e)
    if (keep[e]) uf.unite(m.edges()[e].u, m.edges()[e].v);
  return uf.classes();
}

}  // namespace

PackingResult spanning_tree_packing(const Multigraph& m) {
  const std::size_t n = m.vertex_count();
  const std::size_t target = n == 0 ? 0 : 2 * n - 2;
  UnionOfTwoForests u(m);
  std::size_t size = 0;
  for (std::size_t e = 0; e < m.edge_count(); ++e)
    if (u.insert(e)) ++size;

  PackingResult r;
  if (size == target) {
    std::pair<EdgeSet, EdgeSet> trees;
    for (std::size_t e = 0; e < m.edge_count(); ++e) {
      if (u.owner(e) == 0) trees.first.push_back(e);
      if (u.owner(e) == 1) trees.second.push_back(e);
    }
    r.trees = std::move(trees);
    r.verdict = m.edge_count() == target ? PackingVerdict::Union : PackingVerdict::Contains;
    return r;
  }

  r.verdict = PackingVerdict::Neither;
  const std::vector<bool> closed = u.closure();
  auto parts = components_of(m, closed);
  for (const VertexSet& part : parts) {
    const bool has_spare = std::any_of(part.begin(), part.end(), [&](VertexId v) {
      for (std::size_t e = 0; e < m.edge_count(); ++e)
        if (u.owner(e) == kNone && m.edges()[e].u == v) return true;
      return false;
    });
    if (has_spare) {
      r.violator = part;
      break;
    }
  }
  r.deficit_partition = std::move(parts);
  return r;
}

std::size_t induced_edge_count(const Multigraph& m, const VertexSet& x) {
  std::vector<bool> in(m.vertex_count(), false);
  for (VertexId v : x) in.at(v) = true;
  return static_cast<std::size_t>(
      std::count_if(m.edges().begin(), m.edges().end(), [&](const MultiEdge& e) { return in[e.u] && in[e.v]; }));
}

std::size_t crossing_count(const Multigraph& m, const std::vector<VertexSet>& partition) {
  std::vector<std::size_t> cls(m.vertex_count(), kNone);
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (VertexId v : partition[i]) cls.at(v) = i;
  return static_cast<std::size_t>(
      std::count_if(m.edges().begin(), m.edges().end(), [&](const MultiEdge& e) { return cls[e.u] != cls[e.v]; }));
}

bool is_spanning_tree(const Multigraph& m, const EdgeSet& t) {
  if (m.vertex_count() == 0) return t.empty();
  if (t.size() != m.vertex_count() - 1) return false;
  detail::UnionFind uf(m.vertex_count());
  for (std::size_t e : t) {
    if (e >= m.edge_count() || !uf.unite(m.edges()[e].u, m.edges()[e].v)) return false;
  }
  return true;
}

bool verify_packing(const Multigraph& m, const PackingResult& r) {
  const std::size_t n = m.vertex_count();
  const std::size_t target = n == 0 ? 0 : 2 * n - 2;
  if (r.verdict == PackingVerdict::Neither) {
    if (r.trees) return false;
    if (!r.deficit_partition) return false;
    const auto& p = *r.deficit_partition;
    std::vector<int> hits(n, 0);
    for (const VertexSet& cls : p) {
      if (cls.empty()) return false;
      for (VertexId v : cls) {
        if (v >= n) return false;
        ++hits[v];
      }
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
    if (crossing_count(m, p) >= 2 * (p.size() - 1)) return false;
    if (r.violator) {
      const VertexSet& x = *r.violator;
      if (x.empty() || induced_edge_count(m, x) < 2 * x.size() - 1) return false;
    } else if (m.edge_count() > target) {
      // More edges than two forests can hold always leaves a violator.
      return false;
    }
    return true;
  }
  if (!r.trees) return false;
  const auto& [a, b] = *r.trees;
  if (!is_spanning_tree(m, a) || !is_spanning_tree(m, b)) return false;
  EdgeSet both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::sort(both.begin(), both.end());
  if (std::adjacent_find(both.begin(), both.end()) != both.end()) return false;
  return (r.verdict == PackingVerdict::Union) == (m.edge_count() == target);
}

}  // namespace rigikit
