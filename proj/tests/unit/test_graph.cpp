#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rigikit/corpus.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/oracle.hpp"

using namespace rigikit;
using namespace rigikit::test;

TEST_CASE("parse: digon fixture") {
  const MixedGraph g = fixture("digon");
  CHECK(g.vertex_count() == 2);
  CHECK(g.direction_count() == 1);
  CHECK(g.length_count() == 1);
  CHECK(g.edge(0) == Edge{0, 1, D});
  CHECK(g.edge(1) == Edge{0, 1, L});
}

TEST_CASE("parse: hat fixture") {
  const MixedGraph g = fixture("hat");
  CHECK(g.vertex_count() == 3);
  CHECK(g.direction_count() == 3);
  CHECK(g.length_count() == 1);
}

TEST_CASE("parse: same-kind parallel edges are rejected with a location") {
  try {
    parse_graph(read_data("parallel_len.json"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("parallel length edges") != std::string::npos);
    CHECK(e.location() == "edges[1]");
  }
}

TEST_CASE("parse: malformed JSON reports a byte offset") {
  try {
    parse_graph(read_data("malformed.json"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.location().rfind("byte ", 0) == 0);
  }
}

TEST_CASE("parse: schema violations") {
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[{"u":"a","v":"a","kind":"dir"}]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[{"u":"a","v":"z","kind":"dir"}]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","kind":"bar"}]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","b"]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"([1,2])"), InputError);
}

TEST_CASE("serialization is canonical and round-trips") {
  const MixedGraph a = parse_graph(
      R"({"vertices":["c","a","b"],"edges":[{"u":"c","v":"a","kind":"len"},{"u":"b","v":"a","kind":"dir"}]})");
  const MixedGraph b = parse_graph(
      R"({"vertices":["a","b","c"],"edges":[{"u":"a","v":"b","kind":"dir"},{"u":"a","v":"c","kind":"len"}]})");
  CHECK(serialize_graph(a) == serialize_graph(b));
  CHECK(graph_hash(a) == graph_hash(b));
  CHECK(graph_hash(a).size() == 16);
  CHECK(serialize_graph(a) ==
        R"({"edges":[{"kind":"dir","u":"a","v":"b"},{"kind":"len","u":"a","v":"c"}],"vertices":["a","b","c"]})");

  for (const MixedGraph& g : corpus::exhaustive_mixed(3)) CHECK(parse_graph(serialize_graph(g)) == g);
  for (const MixedGraph& g : corpus::random_mixed_batch(7, 200, 5, 8)) CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("contract_subgraph") {
  const MixedGraph hat = fixture("hat");
  SUBCASE("pair {a,b} of hat leaves two parallel direction edges") {
    const Multigraph m = contract_subgraph(hat, vertices_of(hat, {"a", "b"}));
    REQUIRE(m.vertex_count() == 2);
    REQUIRE(m.edge_count() == 2);
    for (const MultiEdge& e : m.edges()) CHECK(e.kind == D);
    CHECK(m.edges()[0].u == m.edges()[1].u);
    CHECK(m.edges()[0].v == m.edges()[1].v);
  }
  SUBCASE("all vertices") {
    const Multigraph m = contract_subgraph(hat, VertexSet{0, 1, 2});
    CHECK(m.vertex_count() == 1);
    CHECK(m.edge_count() == 0);
  }
  SUBCASE("a singleton changes nothing") {
    for (const MixedGraph& g : corpus::random_mixed_batch(3, 50, 2, 6)) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Multigraph m = contract_subgraph(g, {v});
        REQUIRE(m.vertex_count() == g.vertex_count());
        REQUIRE(m.edge_count() == g.edge_count());
        std::vector<std::tuple<VertexId, VertexId, EdgeKind>> got, want;
        for (const MultiEdge& e : m.edges())
          got.emplace_back(std::min(m.members(e.u)[0], m.members(e.v)[0]),
                           std::max(m.members(e.u)[0], m.members(e.v)[0]), e.kind);
        for (const Edge& e : g.edges()) want.emplace_back(e.u, e.v, e.kind);
        std::sort(got.begin(), got.end());
        CHECK(got == want);
      }
    }
  }
  SUBCASE("invalid sets") {
    CHECK_THROWS_AS(contract_subgraph(hat, {}), PreconditionError);
    CHECK_THROWS_AS(contract_subgraph(hat, {7}), PreconditionError);
  }
}

TEST_CASE("contract_length_edges") {
  SUBCASE("pend: the length pair merges and the direction edge ab becomes a dropped loop") {
    const MixedGraph g = fixture("pend");
    const Multigraph m = contract_length_edges(g);
    CHECK(m.vertex_count() == 2);
    REQUIRE(m.edge_count() == 1);
    CHECK(m.edges()[0].origin == edge_of(g, "b", "c", D));
  }
  SUBCASE("mc5 collapses to a point") {
    const Multigraph m = contract_length_edges(fixture("mc5"));
    CHECK(m.vertex_count() == 1);
    CHECK(m.edge_count() == 0);
  }
  SUBCASE("no length edges: identity") {
    const MixedGraph g = fixture("k4_d");
    const Multigraph m = contract_length_edges(g);
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 6);
  }
  SUBCASE("counts on random graphs") {
    for (const MixedGraph& g : corpus::random_mixed_batch(11, 200, 2, 8)) {
      const Multigraph m = contract_length_edges(g);
      CHECK(m.edge_count() <= g.direction_count());
      const auto length_only = g.edge_subgraph(g.length_edges());
      CHECK(m.vertex_count() == components_without(length_only, {}).size());
    }
  }
}

TEST_CASE("is_2connected") {
  CHECK(is_2connected(fixture("mc5")).value);
  const MixedGraph lolly = fixture("lolly");
  const auto r = is_2connected(lolly);
  CHECK_FALSE(r.value);
  REQUIRE(r.cut_vertex);
  CHECK(lolly.name(*r.cut_vertex) == "a");

  const MixedGraph path = parse_graph(
      R"({"vertices":["a","b","c"],"edges":[{"u":"a","v":"b","kind":"len"},{"u":"b","v":"c","kind":"len"}]})");
  const auto p = is_2connected(path);
  CHECK_FALSE(p.value);
  CHECK(path.name(p.cut_vertex.value()) == "b");

  const MixedGraph split = parse_graph(R"({"vertices":["a","b","c"],"edges":[{"u":"a","v":"b","kind":"len"}]})");
  const auto s = is_2connected(split);
  CHECK_FALSE(s.value);
  CHECK(s.component.has_value());
  CHECK(is_2connected(parse_graph(R"({"vertices":["a"],"edges":[]})")).value);
}

TEST_CASE("is_direction_balanced") {
  const MixedGraph bl = fixture("bowtie_l");
  const auto r = is_direction_balanced(bl);
  CHECK_FALSE(r.value);
  REQUIRE(r.separation);
  CHECK(bl.name(r.separation->u) == "u");
  CHECK(bl.name(r.separation->v) == "v");
  CHECK(bl.names_of(r.separation->sides.at(*r.deficient_side)) == std::vector<std::string>{"x"});
  CHECK(is_direction_balanced(fixture("bowtie_mix")).value);
  CHECK(is_direction_balanced(fixture("mc5")).value);
}

TEST_CASE("is_direction_balanced agrees with the definition on small graphs") {
  std::vector<MixedGraph> graphs = corpus::exhaustive_mixed(4);
  const auto random = corpus::random_mixed_batch(5, 1500, 5, 7, 16);
  graphs.insert(graphs.end(), random.begin(), random.end());
  for (const MixedGraph& g : graphs) {
    const auto fast = is_direction_balanced(g);
    const auto brute = oracle::direction_balanced_brute(g);
    REQUIRE(fast.value == brute.value);
    if (g.direction_count() == 0) {
      // Any 2-separation then leaves a side without direction edges.
      bool separable = false;
      for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v)
          separable = separable || components_without(g, {u, v}).size() >= 2;
      if (separable) CHECK_FALSE(fast.value);
    }
  }
}
