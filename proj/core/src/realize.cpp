#include "rigikit/realize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "rigikit/errors.hpp"
#include "rigikit/graph_io.hpp"

namespace rigikit {

Point operator-(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }
Point operator+(const Point& a, const Point& b) { return Point{a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a) { return Point{-a.x, -a.y}; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational squared_norm(const Point& a) { return a.x * a.x + a.y * a.y; }

MeasurementVector measurements(const Framework& p) {
  MeasurementVector out;
  for (const Edge& e : p.graph.edges()) {
    const Point d = p.at(e.u) - p.at(e.v);
    if (e.kind == EdgeKind::Length) {
      out.values.emplace_back(squared_norm(d));
    } else if (d.x != 0) {
      out.values.emplace_back(Rational(d.y / d.x));
    } else {
      out.values.emplace_back(std::nullopt);
    }
  }
  return out;
}

RationalMatrix rigidity_matrix(const Framework& p) {
  const MixedGraph& g = p.graph;
  if (p.coords.size() != g.vertex_count())
    throw PreconditionError("rigidity_matrix: framework has wrong number of points");
  RationalMatrix m(g.edge_count(), 2 * g.vertex_count());
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const Point d = p.at(e.u) - p.at(e.v);
    if (d.x == 0 && d.y == 0)
      throw PreconditionError("rigidity_matrix: coincident endpoints on edge {" + g.name(e.u) +
                              "," + g.name(e.v) + "}");
    const Rational& a = d.x;
    const Rational& b = d.y;
    if (e.kind == EdgeKind::Length) {
      m(i, 2 * e.u) = a;
      m(i, 2 * e.u + 1) = b;
      m(i, 2 * e.v) = -a;
      m(i, 2 * e.v + 1) = -b;
    } else {
      m(i, 2 * e.u) = b;
      m(i, 2 * e.u + 1) = -a;
      m(i, 2 * e.v) = -b;
      m(i, 2 * e.v + 1) = a;
    }
  }
  return m;
}

std::size_t numeric_rank(const RationalMatrix& m) { return rank_fraction_free(m); }

bool infinitesimally_rigid(const Framework& p) {
  const std::size_t n = p.graph.vertex_count();
  if (n == 0) return true;
  return numeric_rank(rigidity_matrix(p)) == 2 * n - 2;
}

Framework random_generic_framework(const MixedGraph& g, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  Framework f{g, {}};
  f.coords.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t x = engine() >> 2;
    const std::uint64_t y = engine() >> 2;
    f.coords.push_back(Point{Rational(Integer(std::to_string(x))), Rational(Integer(std::to_string(y)))});
  }
  return f;
}

RationalMatrix frame_matrix(const Multigraph& h, std::span<const Point> q) {
  if (q.size() != h.edge_count()) throw PreconditionError("frame_matrix: one vector per edge required");
  RationalMatrix m(h.edge_count(), 2 * h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const MultiEdge& e = h.edges()[i];
    m(i, 2 * e.u) = q[i].x;
    m(i, 2 * e.u + 1) = q[i].y;
    m(i, 2 * e.v) = -q[i].x;
    m(i, 2 * e.v + 1) = -q[i].y;
  }
  return m;
}

std::vector<modp::Row> rigidity_rows_mod_p(const MixedGraph& g, std::span<const ModPoint> coords) {
  const std::size_t cols = 2 * g.vertex_count();
  std::vector<modp::Row> rows;
  rows.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    modp::Row r(cols, 0);
    const std::uint64_t a = modp::sub(coords[e.u][0], coords[e.v][0]);
    const std::uint64_t b = modp::sub(coords[e.u][1], coords[e.v][1]);
    if (e.kind == EdgeKind::Length) {
      r[2 * e.u] = a;
      r[2 * e.u + 1] = b;
      r[2 * e.v] = modp::neg(a);
      r[2 * e.v + 1] = modp::neg(b);
    } else {
      r[2 * e.u] = b;
      r[2 * e.u + 1] = modp::neg(a);
      r[2 * e.v] = modp::neg(b);
      r[2 * e.v + 1] = a;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<modp::Row> frame_rows_mod_p(const Multigraph& h, std::span<const ModPoint> q) {
  const std::size_t cols = 2 * h.vertex_count();
  std::vector<modp::Row> rows;
  rows.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const MultiEdge& e = h.edges()[i];
    modp::Row r(cols, 0);
    r[2 * e.u] = q[i][0];
    r[2 * e.u + 1] = q[i][1];
    r[2 * e.v] = modp::neg(q[i][0]);
    r[2 * e.v + 1] = modp::neg(q[i][1]);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

constexpr int kCountTrials = 3;
constexpr int kInjectivityAttempts = 32;

/// i(X) <= 2|X| - 3 for all |X| >= 2 iff the edges are independent in the
/// generic direction-pure rigidity matroid. A full-rank evaluation over the
/// prime field proves independence outright.
bool direction_pure_independent(const MixedGraph& g, std::uint64_t seed) {
  if (g.edge_count() == 0) return true;
  for (int t = 0; t < kCountTrials; ++t) {
    modp::Sampler sampler(modp::derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<ModPoint> coords(g.vertex_count());
    for (auto& c : coords) c = {sampler.next(), sampler.next()};
    auto rows = rigidity_rows_mod_p(g, coords);
    if (modp::rank(rows, 2 * g.vertex_count()) == g.edge_count()) return true;
  }
  return false;
}

bool injective(std::span<const Point> p) {
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(p.size());
  for (const Point& pt : p) pts.emplace_back(pt.x, pt.y);
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

std::vector<Point> as_points(const std::vector<Rational>& v) {
  std::vector<Point> out(v.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Point{v[2 * i], v[2 * i + 1]};
  return out;
}

bool lexicographically_less(std::span<const Point> a, std::span<const Point> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].x) return a[i].x < b[i].x;
    if (a[i].y != b[i].y) return a[i].y < b[i].y;
  }
  return false;
}

}  // namespace

Framework realize_from_slopes(const SlopeInstance& in, std::uint64_t seed) {
  const MixedGraph& g = in.graph;
  const std::size_t n = g.vertex_count();
  if (g.length_count() != 0) throw PreconditionError("realize_from_slopes: graph must be direction-pure");
  if (in.slopes.size() != g.edge_count())
    throw PreconditionError("realize_from_slopes: one slope per edge required");
  if (in.x0 >= n || in.y0 >= n || in.z0 >= n)
    throw PreconditionError("realize_from_slopes: anchor vertex out of range");
  if (in.x0 == in.y0) throw PreconditionError("realize_from_slopes: x0 and y0 must differ");
  if (in.t2 <= 0) throw PreconditionError("realize_from_slopes: t2 must be positive");
  {
    std::vector<Rational> s = in.slopes;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw PreconditionError("realize_from_slopes: slopes must be pairwise distinct");
  }
  if (!direction_pure_independent(g, seed))
    throw PreconditionError("realize_from_slopes: count condition i(X) <= 2|X|-3 violated");

  RationalMatrix system(g.edge_count() + 2, 2 * n);
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    system(i, 2 * e.u) = in.slopes[i];
    system(i, 2 * e.v) = -in.slopes[i];
    system(i, 2 * e.u + 1) = -1;
    system(i, 2 * e.v + 1) = 1;
  }
  system(g.edge_count(), 2 * in.z0) = 1;
  system(g.edge_count() + 1, 2 * in.z0 + 1) = 1;
  const auto kernel = null_space(system);
  if (kernel.empty()) throw PreconditionError("realize_from_slopes: slope system has only the zero solution");

  std::mt19937_64 engine(seed);
  std::vector<Point> p;
  bool found = false;
  for (int attempt = 0; attempt < kInjectivityAttempts && !found; ++attempt) {
    std::vector<Rational> combo(2 * n);
    if (kernel.size() == 1) {
      combo = kernel.front();
    } else {
      for (const auto& basis : kernel) {
        const auto coeff = static_cast<std::int64_t>(engine() % (1u << 20)) - (1 << 19);
        for (std::size_t c = 0; c < combo.size(); ++c) combo[c] += Rational(coeff) * basis[c];
      }
    }
    p = as_points(combo);
    found = injective(p);
    if (kernel.size() == 1) break;
  }
  if (!found) throw PreconditionError("realize_from_slopes: no injective solution (slopes not generic enough)");

  const Rational q = squared_norm(p[in.x0] - p[in.y0]);
  auto scale = rational_sqrt(Rational(in.t2 / q));
  if (!scale)
    throw PreconditionError(
        "realize_from_slopes: t2 is not a rational square multiple of the solution's squared "
        "distance, so no rational realisation exists");
  for (Point& pt : p) {
    pt.x *= *scale;
    pt.y *= *scale;
  }
  std::vector<Point> flipped(p.size());
  std::transform(p.begin(), p.end(), flipped.begin(), [](const Point& a) { return -a; });
  if (lexicographically_less(p, flipped)) p = std::move(flipped);

  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Point d = p[g.edge(i).u] - p[g.edge(i).v];
    if (in.slopes[i] * d.x != d.y) throw std::logic_error("realize_from_slopes: slope constraint not met");
  }
  if (squared_norm(p[in.x0] - p[in.y0]) != in.t2 || p[in.z0] != Point{})
    throw std::logic_error("realize_from_slopes: anchoring constraints not met");
  return Framework{g, std::move(p)};
}

bool are_equivalent(const MixedGraph& g, std::span<const Point> p, std::span<const Point> q) {
  if (p.size() != g.vertex_count() || q.size() != g.vertex_count())
    throw PreconditionError("are_equivalent: frameworks must cover every vertex");
  for (const Edge& e : g.edges()) {
    const Point dp = p[e.u] - p[e.v];
    const Point dq = q[e.u] - q[e.v];
    if (e.kind == EdgeKind::Length) {
      if (squared_norm(dp) != squared_norm(dq)) return false;
    } else if (dq != Point{} && cross(dp, dq) != 0) {
      return false;
    }
  }
  return true;
}

bool are_congruent(std::span<const Point> p, std::span<const Point> q) {
  if (p.size() != q.size()) throw PreconditionError("are_congruent: vertex sets differ");
  if (p.empty()) return true;
  bool same = true;
  bool negated = true;
  for (std::size_t v = 1; v < p.size(); ++v) {
    const Point dp = p[v] - p[0];
    const Point dq = q[v] - q[0];
    same = same && dq == dp;
    negated = negated && dq == -dp;
  }
  return same || negated;
}

MixedGraph random_minimally_rigid(std::size_t n, std::uint64_t seed, std::size_t length_budget) {
  if (n == 0) throw PreconditionError("random_minimally_rigid: n must be at least 1");
  if (n == 1 ? length_budget != 0 : (length_budget < 1 || length_budget > 2 * n - 3))
    throw PreconditionError("random_minimally_rigid: infeasible length budget " +
                            std::to_string(length_budget) + " for n = " + std::to_string(n));

  std::mt19937_64 engine(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(engine() % k); };
  std::vector<Edge> edges;  // endpoints not yet canonical
  std::size_t lengths = 0;
  if (n >= 2) {
    // From a single vertex the only legal 0-extension is a digon.
    edges.push_back(Edge{0, 1, EdgeKind::Direction});
    edges.push_back(Edge{0, 1, EdgeKind::Length});
    lengths = 1;
  }
  for (std::size_t k = 2; k < n; ++k) {
    const std::size_t remaining = n - 1 - k;
    const std::size_t need = length_budget - lengths;
    std::vector<std::size_t> options;
    for (std::size_t dl = 0; dl <= 2; ++dl)
      if (dl <= need && need - dl <= 2 * remaining) options.push_back(dl);
    const std::size_t dl = options[pick(options.size())];

    auto one_extension = [&] {
      const std::size_t idx = pick(edges.size());
      const Edge old = edges[idx];
      const std::size_t new_lengths = dl + (old.kind == EdgeKind::Length ? 1 : 0);
      std::array<EdgeKind, 3> kinds{};
      for (std::size_t i = 0; i < 3; ++i) kinds[i] = i < new_lengths ? EdgeKind::Length : EdgeKind::Direction;
      for (std::size_t i = 2; i > 0; --i) std::swap(kinds[i], kinds[pick(i + 1)]);
      std::vector<std::size_t> third;
      for (std::size_t z = 0; z < k; ++z) {
        if (z == old.u && kinds[0] == kinds[2]) continue;
        if (z == old.v && kinds[1] == kinds[2]) continue;
        third.push_back(z);
      }
      if (third.empty()) return false;
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(idx));
      edges.push_back(Edge{old.u, k, kinds[0]});
      edges.push_back(Edge{old.v, k, kinds[1]});
      edges.push_back(Edge{third[pick(third.size())], k, kinds[2]});
      return true;
    };
    // Three same-kind edges cannot attach to a digon; fall back to a 0-extension.
    if (pick(2) != 0 && one_extension()) {
      lengths += dl;
      continue;
    }
    const EdgeKind first = dl == 2 ? EdgeKind::Length : EdgeKind::Direction;
    const EdgeKind second = dl == 0 ? EdgeKind::Direction : EdgeKind::Length;
    const std::size_t a = pick(k);
    std::size_t b;
    if (first != second) {
      b = pick(k);
    } else {
      b = pick(k - 1);
      if (b >= a) ++b;
    }
    edges.push_back(Edge{a, k, first});
    edges.push_back(Edge{b, k, second});
    lengths += dl;
  }

  const std::size_t width = std::to_string(n - 1).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  std::vector<NamedEdge> named;
  for (const Edge& e : edges) named.push_back(NamedEdge{names[e.u], names[e.v], e.kind});
  return MixedGraph(names, named);
}

nlohmann::json framework_to_json(const Framework& p) {
  nlohmann::json coords = nlohmann::json::object();
  for (VertexId v = 0; v < p.graph.vertex_count(); ++v)
    coords[p.graph.name(v)] = nlohmann::json::array({rational_to_json(p.at(v).x), rational_to_json(p.at(v).y)});
  return nlohmann::json{{"coords", std::move(coords)}};
}

Framework framework_from_json(const MixedGraph& g, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("coords") || !doc["coords"].is_object())
    throw InputError("$", "framework document must be an object with a \"coords\" object");
  const auto& coords = doc["coords"];
  Framework f{g, std::vector<Point>(g.vertex_count())};
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& [name, value] : coords.items()) {
    const std::string where = "coords." + name;
    auto v = g.find_vertex(name);
    if (!v) throw InputError(where, "unknown vertex");
    if (!value.is_array() || value.size() != 2) throw InputError(where, "expected [x, y]");
    f.coords[*v] = Point{rational_from_json(value[0], where + "[0]"), rational_from_json(value[1], where + "[1]")};
    seen[*v] = true;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) throw InputError("coords", "missing vertex \"" + g.name(v) + "\"");
  return f;
}

SlopeInstance slope_instance_from_json(const nlohmann::json& doc) {
  SlopeInstance in;
  in.graph = graph_from_json(doc);
  in.slopes.assign(in.graph.edge_count(), Rational(0));
  const auto& edges = doc.at("edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    const NamedEdge ne{e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                       parse_edge_kind(e.at("kind").get<std::string>(), where)};
    if (ne.kind != EdgeKind::Direction) throw InputError(where, "slope files hold direction edges only");
    if (!e.contains("slope")) throw InputError(where, "missing field \"slope\"");
    in.slopes[*in.graph.find_edge(ne)] = rational_from_json(e["slope"], where + ".slope");
  }
  auto anchor = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) throw InputError(key, "expected a vertex name");
    auto v = in.graph.find_vertex(doc[key].get<std::string>());
    if (!v) throw InputError(key, "unknown vertex");
    return *v;
  };
  in.x0 = anchor("x0");
  in.y0 = anchor("y0");
  in.z0 = anchor("z0");
  if (!doc.contains("t2")) throw InputError("t2", "missing field");
  in.t2 = rational_from_json(doc["t2"], "t2");
  return in;
}

}  // namespace rigikit
