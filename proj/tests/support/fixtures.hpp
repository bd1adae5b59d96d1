#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "rigikit/graph.hpp"
#include "rigikit/graph_io.hpp"

namespace rigikit::test {

inline std::string data_path(const std::string& name) { return std::string(RIGIKIT_TEST_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Fixture by file stem, e.g. fixture("hat").
inline MixedGraph fixture(const std::string& stem) { return parse_graph(read_data(stem + ".json")); }

inline EdgeIndex edge_of(const MixedGraph& g, const std::string& u, const std::string& v, EdgeKind k) {
  return g.find_edge(NamedEdge{u, v, k}).value();
}

inline VertexSet vertices_of(const MixedGraph& g, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const char* n : names) out.push_back(g.find_vertex(n).value());
  std::sort(out.begin(), out.end());
  return out;
}

constexpr EdgeKind D = EdgeKind::Direction;
constexpr EdgeKind L = EdgeKind::Length;

}  // namespace rigikit::test
