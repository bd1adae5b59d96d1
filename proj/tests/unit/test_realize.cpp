#include <doctest.h>

#include "fixtures.hpp"
#include "rigikit/corpus.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/realize.hpp"

using namespace rigikit;
using namespace rigikit::test;

namespace {

Framework place(const MixedGraph& g, std::vector<std::pair<long, long>> xy) {
  Framework f{g, {}};
  for (auto [x, y] : xy) f.coords.push_back({Rational(x), Rational(y)});
  return f;
}

std::vector<long> ints(const RationalMatrix& m, std::size_t r) {
  std::vector<long> out;
  for (const Rational& q : m.row(r)) out.push_back(q.get_num().get_si());
  return out;
}

SlopeInstance tight_instance(std::size_t n, std::uint64_t seed, Framework& truth) {
  const MixedGraph with_length = random_minimally_rigid(n, seed, 1);
  const MixedGraph g = with_length.without_edge(with_length.length_edges().front());
  truth = random_generic_framework(g, seed ^ 0x5eed);
  SlopeInstance in;
  in.graph = g;
  for (const auto& s : measurements(truth).values) in.slopes.push_back(s.value());
  in.x0 = 0;
  in.y0 = 1;
  in.z0 = static_cast<VertexId>(n - 1);
  in.t2 = squared_norm(truth.at(0) - truth.at(1));
  return in;
}

}  // namespace

TEST_CASE("rigidity_matrix rows") {
  const MixedGraph digon = fixture("digon");
  const RationalMatrix r = rigidity_matrix(place(digon, {{0, 0}, {3, 4}}));
  REQUIRE(r.rows() == 2);
  REQUIRE(r.cols() == 4);
  CHECK(ints(r, 1) == std::vector<long>{-3, -4, 3, 4});
  CHECK(ints(r, 0) == std::vector<long>{-4, 3, 4, -3});
  CHECK(numeric_rank(r) == 2);
  CHECK(infinitesimally_rigid(place(digon, {{0, 0}, {3, 4}})));
  CHECK_THROWS_AS(rigidity_matrix(place(digon, {{1, 1}, {1, 1}})), PreconditionError);
}

TEST_CASE("measurements") {
  const MixedGraph digon = fixture("digon");
  const MeasurementVector m = measurements(place(digon, {{0, 0}, {3, 4}}));
  CHECK(m.values[0].value() == Rational(4, 3));
  CHECK(m.values[1].value() == 25);
  const MeasurementVector vert = measurements(place(digon, {{0, 0}, {0, 4}}));
  CHECK_FALSE(vert.values[0]);
}

TEST_CASE("frame_matrix") {
  Multigraph k4(4), tri(3);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = u + 1; v < 3; ++v) tri.add_edge(u, v);
  const std::vector<Point> one{{3, 4}};
  Multigraph edge(2);
  edge.add_edge(0, 1);
  CHECK(ints(frame_matrix(edge, one), 0) == std::vector<long>{3, 4, -3, -4});

  const std::vector<Point> q6{{1, 2}, {3, 1}, {2, 7}, {5, 3}, {1, 9}, {4, 4}};
  CHECK(numeric_rank(frame_matrix(k4, q6)) == 6);
  CHECK(numeric_rank(frame_matrix(tri, std::span<const Point>(q6).first(3))) == 3);
}

TEST_CASE("exact rank at random frameworks matches the generic rank") {
  for (const MixedGraph& g : corpus::random_mixed_batch(83, 60, 3, 7)) {
    const Framework p = random_generic_framework(g, 7);
    CHECK(numeric_rank(rigidity_matrix(p)) == generic_rank(g));
  }
}

TEST_CASE("realize the slope triangle") {
  const SlopeInstance in = slope_instance_from_json(nlohmann::json::parse(read_data("triangle_slopes.json")));
  const Framework p = realize_from_slopes(in);
  const auto& g = in.graph;
  CHECK(p.at(g.find_vertex("x0").value()) == Point{2, 0});
  CHECK(p.at(g.find_vertex("y0").value()) == Point{1, 1});
  CHECK(p.at(g.find_vertex("z0").value()) == Point{0, 0});
  CHECK(realize_from_slopes(in, 99).coords == p.coords);
}

TEST_CASE("realize a single edge") {
  SlopeInstance in;
  in.graph = parse_graph(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","kind":"dir"}]})");
  in.slopes = {Rational(0)};
  in.x0 = 1;
  in.y0 = 0;
  in.z0 = 0;
  in.t2 = 1;
  const Framework p = realize_from_slopes(in);
  CHECK(p.at(0) == Point{0, 0});
  CHECK(p.at(1) == Point{1, 0});
}

TEST_CASE("realize rejects bad instances") {
  SlopeInstance in = slope_instance_from_json(nlohmann::json::parse(read_data("triangle_slopes.json")));
  SUBCASE("repeated slope") {
    in.slopes[1] = in.slopes[0];
    CHECK_THROWS_AS(realize_from_slopes(in), PreconditionError);
  }
  SUBCASE("non-positive distance") {
    in.t2 = 0;
    CHECK_THROWS_AS(realize_from_slopes(in), PreconditionError);
  }
  SUBCASE("no rational scale") {
    in.t2 = 3;
    CHECK_THROWS_AS(realize_from_slopes(in), PreconditionError);
  }
  SUBCASE("x0 equals y0") {
    in.y0 = in.x0;
    CHECK_THROWS_AS(realize_from_slopes(in), PreconditionError);
  }
}

TEST_CASE("tight instances are recovered up to congruence") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 3 + seed % 6;
    Framework truth;
    const SlopeInstance in = tight_instance(n, seed, truth);
    const Framework p = realize_from_slopes(in, seed);
    CHECK(are_equivalent(in.graph, truth.coords, p.coords));
    CHECK(are_congruent(truth.coords, p.coords));
    CHECK(squared_norm(p.at(0) - p.at(1)) == in.t2);
    CHECK(realize_from_slopes(in, seed + 1000).coords == p.coords);
  }
}

TEST_CASE("equivalence and congruence") {
  const MixedGraph hat = fixture("hat");
  const Framework p = place(hat, {{0, 0}, {4, 0}, {1, 3}});
  std::vector<Point> shifted, flipped, scaled;
  for (const Point& x : p.coords) {
    shifted.push_back(x + Point{5, -2});
    flipped.push_back(-x);
    scaled.push_back({2 * x.x, 2 * x.y});
  }
  CHECK(are_congruent(p.coords, shifted));
  CHECK(are_congruent(p.coords, flipped));
  CHECK(are_equivalent(hat, p.coords, shifted));
  CHECK_FALSE(are_congruent(p.coords, scaled));
  CHECK_FALSE(are_equivalent(hat, p.coords, scaled));
  const MixedGraph k4 = fixture("k4_d");
  const Framework q = place(k4, {{0, 0}, {4, 0}, {1, 3}, {2, 7}});
  std::vector<Point> q2;
  for (const Point& x : q.coords) q2.push_back({2 * x.x, 2 * x.y});
  CHECK(are_equivalent(k4, q.coords, q2));
}

TEST_CASE("random_minimally_rigid") {
  const MixedGraph two = random_minimally_rigid(2, 1, 1);
  CHECK(two.vertex_count() == 2);
  CHECK(two.edges() == fixture("digon").edges());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const std::size_t budget = 1 + seed % (2 * n - 3);
    const MixedGraph g = random_minimally_rigid(n, seed, budget);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == 2 * n - 2);
    CHECK(g.length_count() == budget);
    CHECK(is_independent(g, g.all_edges()));
    CHECK(is_rigid(g));
    CHECK(random_minimally_rigid(n, seed, budget) == g);
  }
  CHECK(random_minimally_rigid(1, 0, 0).vertex_count() == 1);
  CHECK_THROWS_AS(random_minimally_rigid(3, 0, 0), PreconditionError);
  CHECK_THROWS_AS(random_minimally_rigid(3, 0, 4), PreconditionError);
}

TEST_CASE("framework JSON round trip") {
  const MixedGraph g = fixture("hat");
  Framework p = place(g, {{0, 0}, {4, 0}, {1, 3}});
  p.coords[2].x = Rational(7, 3);
  const Framework back = framework_from_json(g, framework_to_json(p));
  CHECK(back.coords == p.coords);
  CHECK_THROWS_AS(framework_from_json(g, nlohmann::json::parse(R"({"coords":{"a":[[0,1],[0,1]]}})")), InputError);
}
