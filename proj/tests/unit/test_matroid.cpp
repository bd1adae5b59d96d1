#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "rigikit/corpus.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/oracle.hpp"

using namespace rigikit;
using namespace rigikit::test;

namespace {

MixedGraph two_length_k4_sharing_a_vertex() {
  std::vector<NamedEdge> edges;
  const std::vector<std::vector<std::string>> blocks{{"a", "b", "c", "d"}, {"d", "e", "f", "g"}};
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) edges.push_back({b[i], b[j], L});
  return MixedGraph({"a", "b", "c", "d", "e", "f", "g"}, edges);
}

std::size_t pure_cap(std::size_t vertices) { return vertices < 2 ? 0 : 2 * vertices - 3; }

}  // namespace

TEST_CASE("generic_rank on fixtures") {
  CHECK(generic_rank(fixture("digon")) == 2);
  CHECK(generic_rank(fixture("tri_l")) == 3);
  CHECK(generic_rank(fixture("k4_d")) == 5);
  CHECK(generic_rank(fixture("mc5")) == 4);
  CHECK(generic_rank(fixture("hat")) == 4);
}

TEST_CASE("is_independent") {
  const MixedGraph hat = fixture("hat");
  CHECK(is_independent(hat, hat.all_edges()));
  const MixedGraph k4 = fixture("k4_d");
  CHECK_FALSE(is_independent(k4, k4.all_edges()));
  CHECK(is_independent(k4, {}));
}

TEST_CASE("is_rigid") {
  CHECK(is_rigid(fixture("digon")));
  CHECK_FALSE(is_rigid(fixture("tri_l")));
  CHECK(is_rigid(fixture("hat")));
  CHECK(is_rigid(parse_graph(R"({"vertices":["a"],"edges":[]})")));
}

TEST_CASE("is_redundantly_rigid") {
  CHECK(is_redundantly_rigid(fixture("mc5")).value);
  const MixedGraph hat = fixture("hat");
  const auto r = is_redundantly_rigid(hat);
  CHECK_FALSE(r.value);
  REQUIRE(r.failing_edge);
  // Every edge of a minimally rigid graph is a valid witness.
  CHECK_FALSE(is_rigid(hat.without_edge(*r.failing_edge)));
  CHECK_FALSE(is_rigid(hat.without_edge(edge_of(hat, "a", "c", D))));
  CHECK_FALSE(is_redundantly_rigid(fixture("digon")).value);
  const auto tri = is_redundantly_rigid(fixture("tri_l"));
  CHECK_FALSE(tri.value);
  CHECK_FALSE(tri.rigid);
}

TEST_CASE("fundamental_circuit") {
  const MixedGraph k4 = fixture("k4_d");
  for (EdgeIndex e = 0; e < 6; ++e) {
    EdgeSet basis;
    for (EdgeIndex f = 0; f < 6; ++f)
      if (f != e) basis.push_back(f);
    CHECK(fundamental_circuit(k4, basis, e) == k4.all_edges());
  }
  const MixedGraph mc5 = fixture("mc5");
  for (EdgeIndex e = 0; e < 5; ++e) {
    EdgeSet basis;
    for (EdgeIndex f = 0; f < 5; ++f)
      if (f != e) basis.push_back(f);
    CHECK(fundamental_circuit(mc5, basis, e) == mc5.all_edges());
  }
  CHECK_THROWS_AS(fundamental_circuit(k4, {0, 1, 2, 3, 4}, 0), PreconditionError);
  CHECK_THROWS_AS(fundamental_circuit(k4, {0, 1, 2, 3}, 5), PreconditionError);
}

TEST_CASE("m_components") {
  CHECK(m_components(fixture("hat")).size() == 4);
  const auto mc5 = m_components(fixture("mc5"));
  REQUIRE(mc5.size() == 1);
  CHECK(mc5.front().size() == 5);
  const auto two = m_components(two_length_k4_sharing_a_vertex());
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 6);
  CHECK(two[1].size() == 6);
}

TEST_CASE("is_m_connected") {
  CHECK(is_m_connected(fixture("mc5")));
  CHECK_FALSE(is_m_connected(fixture("hat")));
  CHECK(is_m_connected(parse_graph(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","kind":"len"}]})")));
}

TEST_CASE("direction_independent") {
  CHECK(direction_independent(fixture("hat")).independent);
  const MixedGraph k4 = fixture("k4_d");
  const auto r = direction_independent(k4);
  CHECK_FALSE(r.independent);
  REQUIRE(r.circuit);
  CHECK(*r.circuit == k4.all_edges());
  CHECK(direction_independent(fixture("digon")).independent);
}

TEST_CASE("rank properties on sampled graphs") {
  std::mt19937_64 rng(99);
  const auto graphs = corpus::random_mixed_batch(21, 300, 3, 7);
  for (const MixedGraph& g : graphs) {
    const GenericRankOracle oracle(g);
    const EdgeSet all = g.all_edges();
    EdgeSet f, bigger;
    for (EdgeIndex e : all) {
      if (rng() % 2) f.push_back(e);
      if (rng() % 2 || std::find(f.begin(), f.end(), e) != f.end()) bigger.push_back(e);
    }
    const std::size_t rf = oracle.rank(f);
    CHECK(rf <= oracle.rank(bigger));
    const std::size_t vf = g.vertices_of(f).size();
    CHECK(rf <= std::min(f.size(), vf == 0 ? std::size_t{0} : 2 * vf - 2));
    const EdgeSet d = g.direction_edges(), l = g.length_edges();
    CHECK(oracle.rank(d) <= pure_cap(g.vertices_of(d).size()));
    CHECK(oracle.rank(l) <= pure_cap(g.vertices_of(l).size()));
  }
}

TEST_CASE("circuits have the sizes the counts dictate") {
  for (const MixedGraph& g : corpus::random_mixed_batch(31, 300, 3, 7)) {
    const MatroidView view = MatroidView::build(g);
    const GenericRankOracle oracle(g);
    CHECK(view.basis.size() == view.rank);
    CHECK(oracle.is_independent(view.basis));
    for (const auto& [e, c] : view.fundamental_circuits) {
      CHECK(std::find(c.begin(), c.end(), e) != c.end());
      std::size_t outside_basis = 0;
      for (EdgeIndex x : c)
        if (!std::binary_search(view.basis.begin(), view.basis.end(), x)) ++outside_basis;
      CHECK(outside_basis == 1);
      const std::size_t vc = g.vertices_of(c).size();
      CHECK(c.size() == (is_mixed(g, c) ? 2 * vc - 1 : 2 * vc - 2));
      for (EdgeIndex x : c) {
        EdgeSet rest;
        for (EdgeIndex y : c)
          if (y != x) rest.push_back(y);
        CHECK(oracle.rank(rest) == c.size() - 1);
      }
    }
  }
}

TEST_CASE("rank is additive over M-components") {
  for (const MixedGraph& g : corpus::random_mixed_batch(41, 300, 3, 7)) {
    const MatroidView view = MatroidView::build(g);
    std::size_t total = 0;
    for (const EdgeSet& comp : view.components) {
      const std::size_t vc = g.vertices_of(comp).size();
      total += is_mixed(g, comp) ? 2 * vc - 2 : 2 * vc - 3;
    }
    CHECK(total == view.rank);
  }
}

TEST_CASE("M-components agree with circuits enumerated by counts") {
  for (const MixedGraph& g : corpus::random_mixed_batch(51, 150, 3, 5, 12)) {
    const auto circuits = oracle::enumerate_circuits(g);
    // Components from all circuits: the reference partition.
    std::vector<std::size_t> cls(g.edge_count());
    std::iota(cls.begin(), cls.end(), 0);
    auto find = [&](std::size_t x) {
      while (cls[x] != x) x = cls[x];
      return x;
    };
    for (const EdgeSet& c : circuits)
      for (EdgeIndex e : c) cls[find(e)] = find(c.front());
    const auto comps = m_components(g);
    for (const EdgeSet& comp : comps)
      for (EdgeIndex e : comp) CHECK(find(e) == find(comp.front()));
    std::set<std::size_t> roots;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) roots.insert(find(e));
    CHECK(roots.size() == comps.size());
  }
}

TEST_CASE("rank oracle is reproducible and seed-robust") {
  const auto graphs = corpus::random_mixed_batch(61, 100, 4, 8);
  for (const MixedGraph& g : graphs) {
    const std::size_t r0 = generic_rank(g, RankOptions{0, 3});
    CHECK(generic_rank(g, RankOptions{0, 3}) == r0);
    CHECK(generic_rank(g, RankOptions{12345, 3}) == r0);
    CHECK(generic_rank(g, RankOptions{7, 1}) == r0);
  }
}
