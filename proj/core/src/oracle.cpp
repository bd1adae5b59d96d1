#include "rigikit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rigikit/bounded.hpp"
#include "rigikit/detail/union_find.hpp"

namespace rigikit::oracle {

namespace {

using Mask = std::uint64_t;

/// inside[X] = edges with both ends in X, for every vertex subset X.
class CountTable {
 public:
  explicit CountTable(const MixedGraph& g) : n_(g.vertex_count()), m_(g.edge_count()) {
    if (n_ > kMaxCountVertices) throw std::length_error("count oracle: too many vertices");
    if (m_ > 64) throw std::length_error("count oracle: too many edges");
    inside_.assign(std::size_t{1} << n_, 0);
    for (std::size_t e = 0; e < m_; ++e) {
      const Edge& ed = g.edge(e);
      if (ed.kind == EdgeKind::Direction) dir_ |= Mask{1} << e;
      const Mask ends = (Mask{1} << ed.u) | (Mask{1} << ed.v);
      for (Mask x = 0; x < inside_.size(); ++x)
        if ((x & ends) == ends) inside_[x] |= Mask{1} << e;
    }
  }

  bool independent(Mask f) const {
    for (Mask x = 0; x < inside_.size(); ++x) {
      const int k = std::popcount(x);
      if (k < 2) continue;
      const Mask in = f & inside_[x];
      if (std::popcount(in) > 2 * k - 2) return false;
      if (std::popcount(in & dir_) > 2 * k - 3) return false;
      if (std::popcount(in & ~dir_) > 2 * k - 3) return false;
    }
    return true;
  }

  std::size_t greedy_rank(Mask within) const {
    Mask kept = 0;
    for (std::size_t e = 0; e < m_; ++e) {
      const Mask bit = Mask{1} << e;
      if ((within & bit) && independent(kept | bit)) kept |= bit;
    }
    return static_cast<std::size_t>(std::popcount(kept));
  }

  Mask all() const { return m_ == 64 ? ~Mask{0} : (Mask{1} << m_) - 1; }
  Mask inside(Mask x) const { return inside_[x]; }
  std::size_t edges() const { return m_; }

 private:
  std::size_t n_;
  std::size_t m_;
  Mask dir_ = 0;
  std::vector<Mask> inside_;
};

Mask to_mask(const EdgeSet& f) {
  Mask out = 0;
  for (EdgeIndex e : f) out |= Mask{1} << e;
  return out;
}

EdgeSet from_mask(Mask m) {
  EdgeSet out;
  for (EdgeIndex e = 0; m != 0; ++e, m >>= 1)
    if (m & 1) out.push_back(e);
  return out;
}

void guard_edges(const MixedGraph& g) {
  if (g.edge_count() > kMaxCountEdges) throw std::length_error("count oracle: more than 20 edges");
}

}  // namespace

bool count_independent(const MixedGraph& g, const EdgeSet& f) { return CountTable(g).independent(to_mask(f)); }

std::size_t rank_by_counts(const MixedGraph& g) {
  guard_edges(g);
  const CountTable t(g);
  return t.greedy_rank(t.all());
}

std::size_t rank_by_counts_exhaustive(const MixedGraph& g) {
  guard_edges(g);
  const CountTable t(g);
  const std::size_t m = t.edges();
  std::size_t best = 0;
  auto search = [&](auto&& self, std::size_t i, Mask kept, std::size_t size) -> void {
    if (size + (m - i) <= best) return;
    if (i == m) {
      best = size;
      return;
    }
    const Mask bit = Mask{1} << i;
    if (t.independent(kept | bit)) self(self, i + 1, kept | bit, size + 1);
    self(self, i + 1, kept, size);
  };
  search(search, 0, 0, 0);
  return best;
}

std::vector<EdgeSet> enumerate_circuits(const MixedGraph& g) {
  guard_edges(g);
  const CountTable t(g);
  std::vector<EdgeSet> out;
  for (Mask f = 1; f <= t.all() && f != 0; ++f) {
    if (t.independent(f)) continue;
    bool minimal = true;
    for (Mask rest = f; rest != 0 && minimal; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      minimal = t.independent(f & ~bit);
    }
    if (minimal) out.push_back(from_mask(f));
    if (f == t.all()) break;
  }
  return out;
}

std::vector<VertexSet> bounded_components_brute(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxBruteVertices) throw std::length_error("bounded_components_brute: more than 6 vertices");
  const CountTable t(augment(g));
  const Mask subsets = Mask{1} << n;
  std::vector<bool> bounded(subsets, false);
  for (Mask x = 1; x < subsets; ++x) {
    const int k = std::popcount(x);
    bounded[x] = k == 1 || t.greedy_rank(t.inside(x)) == static_cast<std::size_t>(2 * k - 2);
  }
  std::vector<VertexSet> out;
  std::vector<int> hits(n, 0);
  for (Mask x = 1; x < subsets; ++x) {
    if (!bounded[x]) continue;
    bool maximal = true;
    for (Mask y = 1; y < subsets && maximal; ++y)
      if (y != x && (y & x) == x && bounded[y]) maximal = false;
    if (!maximal) continue;
    VertexSet block;
    for (VertexId v = 0; v < n; ++v)
      if (x >> v & 1) {
        block.push_back(v);
        ++hits[v];
      }
    out.push_back(std::move(block));
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
    throw std::logic_error("bounded_components_brute: maximal bounded sets do not partition V");
  std::sort(out.begin(), out.end());
  return out;
}

PackingResult packing_brute(const Multigraph& m) {
  const std::size_t n = m.vertex_count();
  const std::size_t edges = m.edge_count();
  if (edges > kMaxPackingEdges) throw std::length_error("packing_brute: more than 14 edges");
  const std::size_t target = n == 0 ? 0 : 2 * n - 2;
  PackingResult r;

  auto spanning_forest = [&](Mask allowed, Mask& chosen) {
    detail::UnionFind uf(n);
    chosen = 0;
    std::size_t joins = 0;
    for (std::size_t e = 0; e < edges; ++e)
      if ((allowed >> e & 1) && uf.unite(m.edges()[e].u, m.edges()[e].v)) {
        chosen |= Mask{1} << e;
        ++joins;
      }
    return n == 0 || joins == n - 1;
  };

  const Mask all = (Mask{1} << edges) - 1;
  for (Mask t1 = 0; t1 <= all; ++t1) {
    if (static_cast<std::size_t>(std::popcount(t1)) != (n == 0 ? 0 : n - 1)) continue;
    Mask check = 0;
    if (!spanning_forest(t1, check) || check != t1) continue;
    Mask t2 = 0;
    if (!spanning_forest(all & ~t1, t2)) continue;
    r.trees = std::make_pair(from_mask(t1), from_mask(t2));
    r.verdict = edges == target ? PackingVerdict::Union : PackingVerdict::Contains;
    return r;
  }

  r.verdict = PackingVerdict::Neither;
  // Restricted growth strings enumerate every partition of V once.
  std::vector<std::size_t> label(n, 0);
  bool found = false;
  auto visit = [&](auto&& self, std::size_t i, std::size_t classes) -> void {
    if (found) return;
    if (i == n) {
      std::size_t crossing = 0;
      for (const MultiEdge& e : m.edges())
        if (label[e.u] != label[e.v]) ++crossing;
      if (crossing < 2 * (classes - 1)) {
        std::vector<VertexSet> p(classes);
        for (VertexId v = 0; v < n; ++v) p[label[v]].push_back(v);
        r.deficit_partition = std::move(p);
        found = true;
      }
      return;
    }
    for (std::size_t c = 0; c <= classes; ++c) {
      label[i] = c;
      self(self, i + 1, std::max(classes, c + 1));
    }
  };
  if (n > 0) visit(visit, 0, 0);
  if (!found) throw std::logic_error("packing_brute: no tree pair and no deficient partition");
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    VertexSet xs;
    for (VertexId v = 0; v < n; ++v)
      if (x >> v & 1) xs.push_back(v);
    if (induced_edge_count(m, xs) >= 2 * xs.size() - 1) {
      r.violator = std::move(xs);
      break;
    }
  }
  return r;
}

BalanceWitness direction_balanced_brute(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxBalanceVertices) throw std::length_error("direction_balanced_brute: more than 7 vertices");
  BalanceWitness w;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      std::vector<VertexId> rest;
      for (VertexId x = 0; x < n; ++x)
        if (x != u && x != v) rest.push_back(x);
      for (Mask a = 1; a + 1 < (Mask{1} << rest.size()); ++a) {
        std::vector<int> side(n, -1);
        for (std::size_t i = 0; i < rest.size(); ++i) side[rest[i]] = (a >> i & 1) ? 1 : 2;
        const bool crossing = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
          return side[e.u] > 0 && side[e.v] > 0 && side[e.u] != side[e.v];
        });
        if (crossing) continue;
        for (int s = 1; s <= 2; ++s) {
          const bool has_direction = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            if (e.kind != EdgeKind::Direction || (e.u == u && e.v == v)) return false;
            return (side[e.u] == s || side[e.u] < 0) && (side[e.v] == s || side[e.v] < 0);
          });
          if (has_direction) continue;
          w.value = false;
          w.u = u;
          w.v = v;
          for (VertexId x : rest)
            if (side[x] == s) w.side.push_back(x);
          return w;
        }
      }
    }
  return w;
}

nlohmann::json to_json(const OracleReport& r) {
  return nlohmann::json{
      {"predicate", r.predicate}, {"input_hash", r.input_hash}, {"value", r.value}, {"witness", r.witness}};
}

}  // namespace rigikit::oracle
