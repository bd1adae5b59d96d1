#include "rigikit/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rigikit::corpus {

namespace {

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::vector<std::pair<VertexId, VertexId>> pairs(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

std::size_t pick(std::mt19937_64& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

}  // namespace

std::vector<MixedGraph> exhaustive_mixed(std::size_t max_vertices) {
  std::vector<MixedGraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const auto names = letters(n);
    const auto ps = pairs(n);
    std::size_t configs = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) configs *= 4;
    for (std::size_t c = 0; c < configs; ++c) {
      std::vector<NamedEdge> edges;
      std::size_t code = c;
      for (const auto& [u, v] : ps) {
        const std::size_t state = code % 4;
        code /= 4;
        if (state & 1) edges.push_back({names[u], names[v], EdgeKind::Direction});
        if (state & 2) edges.push_back({names[u], names[v], EdgeKind::Length});
      }
      out.emplace_back(names, edges);
    }
  }
  return out;
}

MixedGraph random_mixed(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  const auto names = letters(n);
  std::vector<Edge> slots;
  for (const auto& [u, v] : pairs(n)) {
    slots.push_back({u, v, EdgeKind::Direction});
    slots.push_back({u, v, EdgeKind::Length});
  }
  const std::size_t lo = n == 0 ? 0 : n - 1;
  const std::size_t hi = std::min(max_edges, slots.size());
  const std::size_t m = lo >= hi ? hi : lo + pick(rng, hi - lo + 1);
  for (std::size_t i = 0; i < m; ++i) std::swap(slots[i], slots[i + pick(rng, slots.size() - i)]);
  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({names[slots[i].u], names[slots[i].v], slots[i].kind});
  return MixedGraph(names, edges);
}

std::vector<MixedGraph> random_mixed_batch(std::uint64_t seed, std::size_t count, std::size_t min_vertices,
                                           std::size_t max_vertices, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<MixedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_vertices + pick(rng, max_vertices - min_vertices + 1);
    out.push_back(random_mixed(rng, n, max_edges));
  }
  return out;
}

std::vector<Multigraph> exhaustive_multigraphs(std::size_t max_vertices, std::size_t max_multiplicity,
                                               std::size_t max_edges) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const auto ps = pairs(n);
    std::vector<std::size_t> mult(ps.size(), 0);
    for (;;) {
      if (std::accumulate(mult.begin(), mult.end(), std::size_t{0}) <= max_edges) {
        Multigraph m(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
          for (std::size_t k = 0; k < mult[i]; ++k) m.add_edge(ps[i].first, ps[i].second);
        out.push_back(std::move(m));
      }
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == max_multiplicity) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  return out;
}

Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t edges) {
  Multigraph m(n);
  const auto ps = pairs(n);
  if (ps.empty()) return m;
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& [u, v] = ps[pick(rng, ps.size())];
    m.add_edge(u, v);
  }
  return m;
}

MixedGraph relabel(const MixedGraph& g, std::mt19937_64& rng) {
  std::vector<std::string> names = g.vertex_names();
  for (std::size_t i = names.size(); i > 1; --i) std::swap(names[i - 1], names[pick(rng, i)]);
  std::vector<NamedEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({names[e.u], names[e.v], e.kind});
  return MixedGraph(names, edges);
}

}  // namespace rigikit::corpus
