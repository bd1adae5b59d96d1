#include "rigikit/reduce.hpp"

#include <algorithm>

#include "rigikit/bounded.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/graph_io.hpp"

namespace rigikit {

std::string_view to_string(ReductionKind k) { return k == ReductionKind::R1 ? "R1" : "R2"; }

namespace {

VertexSet vertex_ids(const MixedGraph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& name : names) {
    auto v = g.find_vertex(name);
    if (!v) throw PreconditionError("reduction step names unknown vertex \"" + name + "\"");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet edge_ids(const MixedGraph& g, const std::vector<NamedEdge>& edges) {
  EdgeSet out;
  for (const auto& e : edges) {
    auto i = g.find_edge(e);
    if (!i) throw PreconditionError("reduction step names an edge not in the graph");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_rigid_and_independent(const MixedGraph& g, const RankOptions& options, const char* who) {
  if (!is_rigid(g, options)) throw PreconditionError(std::string(who) + ": graph is not rigid");
  if (!direction_independent(g, options).independent)
    throw PreconditionError(std::string(who) + ": direction edges are not independent");
}

}  // namespace

MixedGraph apply_step(const MixedGraph& g, const ReductionStep& step) {
  if (step.kind == ReductionKind::R1) {
    auto e = g.find_edge(step.edge);
    if (!e) throw PreconditionError("apply_step: R1 edge not in graph");
    return g.without_edge(*e);
  }
  return g.induced(vertex_ids(g, step.block));
}

std::optional<ReductionStep> find_R1(const MixedGraph& g, const RankOptions& options) {
  const DirectionIndependence di = direction_independent(g, options);
  if (di.independent) return std::nullopt;
  ReductionStep step;
  step.kind = ReductionKind::R1;
  step.edge = g.named(*di.edge);
  step.circuit = g.named(*di.circuit);
  return step;
}

std::optional<ReductionStep> find_R2(const MixedGraph& g, const RankOptions& options) {
  require_rigid_and_independent(g, options, "find_R2");
  for (EdgeIndex e : g.direction_edges()) {
    const MixedGraph h = g.without_edge(e);
    if (is_bounded(h, options)) continue;
    const auto blocks = bounded_components(h, options).nontrivial_blocks();
    if (blocks.size() != 1) continue;
    ReductionStep step;
    step.kind = ReductionKind::R2;
    step.edge = g.named(e);
    step.block = g.names_of(blocks.front());
    return step;
  }
  return std::nullopt;
}

bool check_reduction_to(const MixedGraph& g, const VertexSet& keep, const RankOptions& options) {
  require_rigid_and_independent(g, options, "check_reduction_to");
  if (keep.empty() || keep.size() >= g.vertex_count())
    throw PreconditionError("check_reduction_to: retained vertex set must be a non-empty proper subset");
  if (keep.back() >= g.vertex_count() || std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw PreconditionError("check_reduction_to: invalid vertex set");
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : keep) in[v] = true;
  std::size_t removed_directions = 0;
  for (const Edge& e : g.edges()) {
    const bool inside = in[e.u] && in[e.v];
    if (e.kind == EdgeKind::Length && !inside) return false;
    if (e.kind == EdgeKind::Direction && !inside) ++removed_directions;
  }
  return removed_directions == 2 * (g.vertex_count() - keep.size());
}

ReductionTrace reduce_fully(const MixedGraph& g, const RankOptions& options) {
  ReductionTrace trace;
  trace.result = g;
  trace.hashes.push_back(graph_hash(g));
  const bool rigid = is_rigid(g, options);
  trace.partial = !rigid;
  for (;;) {
    auto step = find_R1(trace.result, options);
    if (!step && rigid) step = find_R2(trace.result, options);
    if (!step) break;
    trace.result = apply_step(trace.result, *step);
    trace.hashes.push_back(graph_hash(trace.result));
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

bool is_direction_irreducible(const MixedGraph& g, const RankOptions& options) {
  if (find_R1(g, options)) return false;
  if (!is_rigid(g, options)) return true;
  return !find_R2(g, options);
}

std::optional<std::string> verify_trace(const MixedGraph& g, const ReductionTrace& trace,
                                        const RankOptions& options) {
  MixedGraph current = g;
  if (trace.hashes.size() != trace.steps.size() + 1) return "hash list has the wrong length";
  if (trace.hashes.front() != graph_hash(current)) return "input hash mismatch";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& s = trace.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    const std::size_t before = current.direction_count() + current.vertex_count();
    try {
      if (s.kind == ReductionKind::R1) {
        if (s.edge.kind != EdgeKind::Direction) return where + "R1 edge is not a direction edge";
        if (std::find(s.circuit.begin(), s.circuit.end(), s.edge) == s.circuit.end())
          return where + "R1 edge is not in its circuit";
        const EdgeSet c = edge_ids(current, s.circuit);
        if (current.count_direction(c) != c.size()) return where + "R1 circuit is not direction-pure";
        const GenericRankOracle oracle(current, options);
        if (oracle.rank(c) != c.size() - 1) return where + "R1 circuit is not dependent of corank one";
        for (EdgeIndex x : c) {
          EdgeSet rest;
          std::copy_if(c.begin(), c.end(), std::back_inserter(rest), [&](EdgeIndex y) { return y != x; });
          if (!oracle.is_independent(rest)) return where + "R1 circuit is not minimal";
        }
      } else {
        if (!check_reduction_to(current, vertex_ids(current, s.block), options))
          return where + "R2 block fails the reducibility count";
      }
      current = apply_step(current, s);
    } catch (const PreconditionError& e) {
      return where + e.what();
    }
    if (current.direction_count() + current.vertex_count() >= before) return where + "|D| + |V| did not decrease";
    if (graph_hash(current) != trace.hashes[i + 1]) return where + "hash mismatch";
  }
  if (!(current == trace.result)) return "replayed graph differs from the recorded result";
  return std::nullopt;
}

}  // namespace rigikit
