#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigikit/graph.hpp"
#include "rigikit/modular.hpp"
#include "rigikit/rational.hpp"

namespace rigikit {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a);
Rational cross(const Point& a, const Point& b);
Rational squared_norm(const Point& a);

/// A mixed graph with an exact planar position per vertex, indexed by
/// VertexId.
struct Framework {
  MixedGraph graph;
  std::vector<Point> coords;

  const Point& at(VertexId v) const { return coords.at(v); }
};

/// Squared length for length edges, slope dy/dx for direction edges (empty
/// when the edge is vertical or degenerate). Canonical edge order.
struct MeasurementVector {
  std::vector<std::optional<Rational>> values;
};

MeasurementVector measurements(const Framework& p);

/// R(G, p): one row per edge in canonical order, two columns per vertex.
/// With (a, b) = p(u) - p(v) for the canonical orientation u < v, a length
/// row holds (a, b) at u and (-a, -b) at v; a direction row holds (b, -a) at
/// u and (-b, a) at v. Throws PreconditionError on coincident endpoints.
RationalMatrix rigidity_matrix(const Framework& p);

std::size_t numeric_rank(const RationalMatrix& m);
bool infinitesimally_rigid(const Framework& p);

/// Integer coordinates drawn uniformly from [0, 2^62), reproducible from the
/// seed.
Framework random_generic_framework(const MixedGraph& g, std::uint64_t seed);

/// Incidence matrix of the frame (H, q): row e = uv holds q(e) at u and
/// -q(e) at v. `q` is indexed like H.edges().
RationalMatrix frame_matrix(const Multigraph& h, std::span<const Point> q);

using ModPoint = std::array<std::uint64_t, 2>;

/// Rigidity-matrix rows over the prime field at the given coordinates.
std::vector<modp::Row> rigidity_rows_mod_p(const MixedGraph& g, std::span<const ModPoint> coords);
/// Frame incidence rows over the prime field.
std::vector<modp::Row> frame_rows_mod_p(const Multigraph& h, std::span<const ModPoint> q);

/// Input for realisation from prescribed slopes. The graph must contain only
/// direction edges; slopes are indexed like graph.edges().
struct SlopeInstance {
  MixedGraph graph;
  std::vector<Rational> slopes;
  VertexId x0 = 0;
  VertexId y0 = 0;
  VertexId z0 = 0;
  Rational t2;  // required squared distance between x0 and y0
};

/// Solves s_e (x_u - x_v) = y_u - y_v for every edge with z0 pinned at the
/// origin, picks an injective null vector and scales it so that
/// |p(x0) - p(y0)|^2 = t2. Of the pair {p, -p} the lexicographically larger
/// coordinate vector is returned. Throws PreconditionError when the count
/// condition i(X) <= 2|X| - 3 fails, slopes repeat, x0 == y0, t2 <= 0, no
/// injective solution turns up within 32 attempts, or t2 / |p(x0)-p(y0)|^2
/// is not a rational square.
Framework realize_from_slopes(const SlopeInstance& instance, std::uint64_t seed = 0);

/// Same directions on direction edges (wherever q separates the endpoints)
/// and same squared lengths on length edges.
bool are_equivalent(const MixedGraph& g, std::span<const Point> p, std::span<const Point> q);
/// Related by a translation, possibly followed by a point reflection.
bool are_congruent(std::span<const Point> p, std::span<const Point> q);

/// A minimally rigid mixed graph on n vertices grown from one vertex by
/// random 0- and 1-extensions, with exactly `length_budget` length edges.
/// Feasible budgets: 0 for n = 1, otherwise 1..2n-3.
MixedGraph random_minimally_rigid(std::size_t n, std::uint64_t seed, std::size_t length_budget);

nlohmann::json framework_to_json(const Framework& p);
/// `{"coords":{"a":[[xn,xd],[yn,yd]],...}}`; every vertex of g must appear.
Framework framework_from_json(const MixedGraph& g, const nlohmann::json& doc);

/// Slope file: a graph document whose edges carry `"slope":[n,d]`, plus
/// `"x0"`, `"y0"`, `"z0"` vertex names and `"t2":[n,d]`.
SlopeInstance slope_instance_from_json(const nlohmann::json& doc);

}  // namespace rigikit
