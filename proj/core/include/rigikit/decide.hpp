#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rigikit/graph.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/reduce.hpp"

namespace rigikit {

/// ALL: every generic realisation is globally rigid. NOT_ALL only says that
/// some generic realisation is not; whether another generic realisation is
/// globally rigid is left open.
enum class Answer { AllGenericGloballyRigid, NotAll };

std::string_view to_string(Answer a);

namespace cert {

struct TrivialSingleVertex {};

struct RigidWithOneLengthEdge {
  /// Established on the reduced graph rather than by the fast path.
  bool via_reduction = false;
};

/// The reduced graph is 2-connected, direction-balanced and redundantly
/// rigid.
struct IrreducibleAllConditions {
  std::size_t rank = 0;
};

struct NotRigid {
  std::size_t rank = 0;
  std::size_t required = 0;
  /// |L| = 0: direction-pure sets have rank at most 2|V| - 3.
  bool no_length_edges = false;
};

/// Refers to the reduced graph (the trace result).
struct Not2Connected {
  std::optional<std::string> cut_vertex;
  /// Set when the graph is disconnected.
  std::optional<std::vector<std::string>> component;
};

struct NotDirectionBalanced {
  std::string u;
  std::string v;
  std::vector<std::string> side;
};

struct NotRedundantlyRigid {
  NamedEdge edge;
};

/// Sparse case, |E| = 2|V| - 1: the unique circuit of M(G) and the three
/// properties that decide the answer.
struct SparseCircuit {
  std::vector<NamedEdge> circuit;
  bool mixed = false;
  bool direction_balanced = false;
  bool contains_lengths = false;

  bool holds() const { return mixed && direction_balanced && contains_lengths; }
};

}  // namespace cert

using Certificate = std::variant<cert::TrivialSingleVertex, cert::RigidWithOneLengthEdge,
                                 cert::IrreducibleAllConditions, cert::NotRigid, cert::Not2Connected,
                                 cert::NotDirectionBalanced, cert::NotRedundantlyRigid, cert::SparseCircuit>;

std::string_view certificate_name(const Certificate& c);

struct Verdict {
  Answer answer = Answer::NotAll;
  Certificate certificate;
  /// Present when the reduction stage ran.
  std::optional<ReductionTrace> trace;
  /// Name of the result that justifies the answer.
  std::string justification;
};

struct DecideOptions {
  RankOptions rank;
  /// Answer YES right away for rigid graphs with one length edge. Switching
  /// it off sends those graphs through the reduction stage.
  bool single_length_fast_path = true;
};

Verdict decide_global_rigidity(const MixedGraph& g, const DecideOptions& options = {});

/// Characterisation for |E| <= 2|V| - 1 (PreconditionError otherwise).
Verdict decide_sparse(const MixedGraph& g, const RankOptions& options = {});

/// Re-runs the predicate each certificate refers to. Returns an explanation
/// of the first failed check, or nothing.
std::optional<std::string> check_certificate(const MixedGraph& g, const Verdict& v,
                                             const RankOptions& options = {});

struct EdgeCheck {
  NamedEdge edge;
  bool value = false;
};

/// Each condition evaluated on G itself, independently of the others.
struct ConditionsReport {
  std::size_t rank = 0;
  std::size_t required_rank = 0;
  bool rigid = false;
  RedundancyResult redundantly_rigid;
  ConnectivityResult two_connected;
  BalanceResult direction_balanced;
  std::size_t m_component_count = 0;
  bool m_connected = false;
  DirectionIndependence direction_independent;
  bool bounded = false;
  /// G - e rigid, for each e in L.
  std::vector<EdgeCheck> length_redundancy;
  /// G - e bounded, for each e in D.
  std::vector<EdgeCheck> direction_boundedness;

  bool all_length_redundant() const;
  bool all_direction_bounded() const;
};

ConditionsReport conditions_report(const MixedGraph& g, const RankOptions& options = {});

}  // namespace rigikit
