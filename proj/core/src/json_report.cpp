#include "rigikit/json_report.hpp"

#include "rigikit/graph_io.hpp"

namespace rigikit {

namespace {

using nlohmann::json;

json edges_json(const std::vector<NamedEdge>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(edge_to_json(e));
  return out;
}

json names_json(const MixedGraph& g, const VertexSet& vs) { return json(g.names_of(vs)); }

json certificate_json(const Certificate& c) {
  json out{{"kind", std::string(certificate_name(c))}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, cert::RigidWithOneLengthEdge>) {
          out["via_reduction"] = x.via_reduction;
        } else if constexpr (std::is_same_v<T, cert::IrreducibleAllConditions>) {
          out["rank"] = x.rank;
          out["two_connected"] = true;
          out["direction_balanced"] = true;
          out["redundantly_rigid"] = true;
        } else if constexpr (std::is_same_v<T, cert::NotRigid>) {
          out["rank"] = x.rank;
          out["required"] = x.required;
          out["no_length_edges"] = x.no_length_edges;
        } else if constexpr (std::is_same_v<T, cert::Not2Connected>) {
          out["cut_vertex"] = x.cut_vertex ? json(*x.cut_vertex) : json(nullptr);
          if (x.component) out["component"] = *x.component;
        } else if constexpr (std::is_same_v<T, cert::NotDirectionBalanced>) {
          out["cut_pair"] = {x.u, x.v};
          out["side"] = x.side;
        } else if constexpr (std::is_same_v<T, cert::NotRedundantlyRigid>) {
          out["edge"] = edge_to_json(x.edge);
        } else if constexpr (std::is_same_v<T, cert::SparseCircuit>) {
          out["circuit"] = edges_json(x.circuit);
          out["mixed"] = x.mixed;
          out["direction_balanced"] = x.direction_balanced;
          out["contains_all_length_edges"] = x.contains_lengths;
        }
      },
      c);
  return out;
}

json edge_checks(const std::vector<EdgeCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"edge", edge_to_json(c.edge)}, {"value", c.value}});
  return out;
}

}  // namespace

json to_json(const ReductionStep& s) {
  json out{{"kind", std::string(to_string(s.kind))}, {"edge", edge_to_json(s.edge)}};
  if (s.kind == ReductionKind::R1) {
    out["circuit"] = edges_json(s.circuit);
  } else {
    out["block"] = s.block;
  }
  return out;
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    json s = to_json(t.steps[i]);
    s["hash_before"] = t.hashes.at(i);
    s["hash_after"] = t.hashes.at(i + 1);
    steps.push_back(std::move(s));
  }
  return json{{"steps", std::move(steps)},
              {"partial", t.partial},
              {"result", graph_to_json(t.result)},
              {"result_hash", t.hashes.back()}};
}

json to_json(const Verdict& v) {
  json out{{"answer", std::string(to_string(v.answer))},
           {"certificate", certificate_json(v.certificate)},
           {"justification", v.justification}};
  out["note"] = v.answer == Answer::AllGenericGloballyRigid
                    ? "every generic realisation is globally rigid"
                    : "some generic realisation is not globally rigid; whether another generic realisation "
                      "is globally rigid is an open question";
  if (v.trace) out["trace"] = to_json(*v.trace);
  return out;
}

json to_json(const MixedGraph& g, const ConditionsReport& r) {
  json out;
  out["rank"] = r.rank;
  out["required_rank"] = r.required_rank;
  out["rigid"] = r.rigid;
  out["redundantly_rigid"] = {{"value", r.redundantly_rigid.value}};
  if (r.redundantly_rigid.failing_edge)
    out["redundantly_rigid"]["failing_edge"] = edge_to_json(g.named(*r.redundantly_rigid.failing_edge));
  out["two_connected"] = {{"value", r.two_connected.value}};
  if (r.two_connected.cut_vertex) out["two_connected"]["cut_vertex"] = g.name(*r.two_connected.cut_vertex);
  if (r.two_connected.component) out["two_connected"]["component"] = names_json(g, *r.two_connected.component);
  out["direction_balanced"] = {{"value", r.direction_balanced.value}};
  if (r.direction_balanced.separation) {
    const Separation& s = *r.direction_balanced.separation;
    out["direction_balanced"]["cut_pair"] = {g.name(s.u), g.name(s.v)};
    out["direction_balanced"]["side"] = names_json(g, s.sides.at(*r.direction_balanced.deficient_side));
  }
  out["m_connected"] = r.m_connected;
  out["m_component_count"] = r.m_component_count;
  out["direction_independent"] = {{"value", r.direction_independent.independent}};
  if (r.direction_independent.circuit)
    out["direction_independent"]["circuit"] = edges_json(g.named(*r.direction_independent.circuit));
  out["bounded"] = r.bounded;
  out["length_redundancy"] = {{"value", r.all_length_redundant()}, {"edges", edge_checks(r.length_redundancy)}};
  out["direction_boundedness"] = {{"value", r.all_direction_bounded()},
                                  {"edges", edge_checks(r.direction_boundedness)}};
  return out;
}

json to_json(const MatroidView& m) {
  json circuits = json::array();
  for (const auto& [e, c] : m.fundamental_circuits)
    circuits.push_back({{"edge", edge_to_json(m.graph.named(e))}, {"circuit", edges_json(m.graph.named(c))}});
  json components = json::array();
  for (const EdgeSet& c : m.components) components.push_back(edges_json(m.graph.named(c)));
  return json{{"rank", m.rank},
              {"basis", edges_json(m.graph.named(m.basis))},
              {"fundamental_circuits", std::move(circuits)},
              {"m_components", std::move(components)}};
}

json to_json(const MixedGraph& g, const BoundedDecomposition& d) {
  json blocks = json::array();
  for (const VertexSet& b : d.blocks) blocks.push_back(names_json(g, b));
  return json{{"blocks", std::move(blocks)}, {"nontrivial_count", d.nontrivial_blocks().size()}};
}

json to_json(const Multigraph& m, const PackingResult& r) {
  json out{{"verdict", std::string(to_string(r.verdict))}};
  auto edge_list = [&](const EdgeSet& es) {
    json a = json::array();
    for (std::size_t e : es) a.push_back({m.edges()[e].u, m.edges()[e].v});
    return a;
  };
  if (r.trees) out["trees"] = {edge_list(r.trees->first), edge_list(r.trees->second)};
  if (r.violator) out["violator"] = *r.violator;
  if (r.deficit_partition) out["deficit_partition"] = *r.deficit_partition;
  return out;
}

}  // namespace rigikit
