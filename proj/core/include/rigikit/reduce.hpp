#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigikit/graph.hpp"
#include "rigikit/matroid.hpp"

namespace rigikit {

enum class ReductionKind { R1, R2 };

std::string_view to_string(ReductionKind k);

/// One direction reduction, spelled with vertex names so it stays meaningful
/// after the graph shrinks.
struct ReductionStep {
  ReductionKind kind = ReductionKind::R1;
  /// R1: the deleted direction edge. R2: the direction edge e whose removal
  /// exposed the block.
  NamedEdge edge;
  /// R1: the direction-pure circuit containing `edge`.
  std::vector<NamedEdge> circuit;
  /// R2: vertex set of the retained induced subgraph.
  std::vector<std::string> block;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  MixedGraph result;
  /// Set on non-rigid input: only R1 was exhausted.
  bool partial = false;
  /// Hash of the input followed by the hash after each step.
  std::vector<std::string> hashes;
};

MixedGraph apply_step(const MixedGraph& g, const ReductionStep& step);

/// Deletes the first direction edge (canonical order) that closes a circuit
/// inside D.
std::optional<ReductionStep> find_R1(const MixedGraph& g, const RankOptions& options = {});

/// Requires G rigid and direction-independent (PreconditionError naming the
/// failed hypothesis otherwise). Returns the first e in D, in canonical
/// order, such that G - e is unbounded with exactly one nontrivial bounded
/// component; that component is the retained block.
std::optional<ReductionStep> find_R2(const MixedGraph& g, const RankOptions& options = {});

/// For G rigid and direction-independent and H = G[keep] proper: true iff H
/// holds every length edge and |D \ D'| = 2|V \ V'|.
bool check_reduction_to(const MixedGraph& g, const VertexSet& keep, const RankOptions& options = {});

/// R1 until exhausted, then R2, repeated. Non-rigid input gets R1 only and a
/// partial trace.
ReductionTrace reduce_fully(const MixedGraph& g, const RankOptions& options = {});

/// Neither rule applies (R2 only considered on rigid graphs).
bool is_direction_irreducible(const MixedGraph& g, const RankOptions& options = {});

/// Replays a trace from g and re-checks every step: R1 edges lie in a
/// direction-pure circuit (verified by rank), R2 blocks pass
/// check_reduction_to, |D| + |V| strictly decreases, hashes and result
/// match. Returns an explanation of the first failure, or nothing.
std::optional<std::string> verify_trace(const MixedGraph& g, const ReductionTrace& trace,
                                        const RankOptions& options = {});

}  // namespace rigikit
