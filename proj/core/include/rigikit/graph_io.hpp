#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rigikit/graph.hpp"

namespace rigikit {

/// Parses `{"vertices":[...],"edges":[{"u":..,"v":..,"kind":"dir"|"len"},...]}`.
/// Throws InputError with a location on malformed JSON or schema violations.
MixedGraph parse_graph(std::string_view text);
MixedGraph graph_from_json(const nlohmann::json& doc);

/// Canonical form: vertices sorted, edges sorted by (min, max, kind).
nlohmann::json graph_to_json(const MixedGraph& g);
std::string serialize_graph(const MixedGraph& g);

/// FNV-1a over the compact canonical serialization, as 16 hex digits.
std::string graph_hash(const MixedGraph& g);

EdgeKind parse_edge_kind(std::string_view text, const std::string& location);
nlohmann::json edge_to_json(const NamedEdge& e);

}  // namespace rigikit
