#include "rigikit/graph_io.hpp"

#include <cstdint>
#include <cstdio>

#include "rigikit/errors.hpp"

namespace rigikit {

using nlohmann::json;

EdgeKind parse_edge_kind(std::string_view text, const std::string& location) {
  if (text == "dir") return EdgeKind::Direction;
  if (text == "len") return EdgeKind::Length;
  throw InputError(location, "kind must be \"dir\" or \"len\", got \"" + std::string(text) + "\"");
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw InputError(where + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

MixedGraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("$", "graph document must be an object");
  const json& vs = require(doc, "vertices", "$");
  if (!vs.is_array()) throw InputError("vertices", "expected an array");
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string())
      throw InputError("vertices[" + std::to_string(i) + "]", "expected a string");
    names.push_back(vs[i].get<std::string>());
  }
  std::vector<NamedEdge> edges;
  const json& es = require(doc, "edges", "$");
  if (!es.is_array()) throw InputError("edges", "expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = es[i];
    if (!e.is_object()) throw InputError(where, "expected an object");
    NamedEdge ne;
    ne.u = require_string(e, "u", where);
    ne.v = require_string(e, "v", where);
    ne.kind = parse_edge_kind(require_string(e, "kind", where), where + ".kind");
    edges.push_back(std::move(ne));
  }
  return MixedGraph(std::move(names), edges);
}

MixedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError("byte " + std::to_string(err.byte), "malformed JSON");
  }
  return graph_from_json(doc);
}

json edge_to_json(const NamedEdge& e) {
  return json{{"u", e.u}, {"v", e.v}, {"kind", std::string(to_string(e.kind))}};
}

json graph_to_json(const MixedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_to_json(g.named(e)));
  return json{{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

std::string serialize_graph(const MixedGraph& g) { return graph_to_json(g).dump(); }

std::string graph_hash(const MixedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_graph(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rigikit
