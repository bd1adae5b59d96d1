#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigikit/graph.hpp"
#include "rigikit/packing.hpp"

// Exponential-time reference implementations. They use only the counting
// definitions and exhaustive search, never the algebraic rank oracle or the
// matroid-union algorithm, and fail loudly outside their size guards.
namespace rigikit::oracle {

inline constexpr std::size_t kMaxCountEdges = 20;
inline constexpr std::size_t kMaxCountVertices = 16;
inline constexpr std::size_t kMaxBruteVertices = 6;
inline constexpr std::size_t kMaxPackingEdges = 14;
inline constexpr std::size_t kMaxBalanceVertices = 7;

/// Every non-empty F' of F has |F'| <= 2|V(F')| - 2, strictly when F' is
/// pure; evaluated over vertex subsets X: i_F(X) <= 2|X| - 2 and
/// i_{F cap D}(X), i_{F cap L}(X) <= 2|X| - 3.
bool count_independent(const MixedGraph& g, const EdgeSet& f);

/// Largest count-independent subset, by a greedy pass. Guard: |E| <= 20.
std::size_t rank_by_counts(const MixedGraph& g);
/// Same quantity by branch and bound over all subsets (no matroid
/// assumption). Guard: |E| <= 20.
std::size_t rank_by_counts_exhaustive(const MixedGraph& g);

/// All minimal count-dependent edge sets, in increasing bitmask order.
std::vector<EdgeSet> enumerate_circuits(const MixedGraph& g);

/// Maximal vertex sets whose induced subgraph has a rigid augmentation
/// (checked by counts). Throws std::logic_error if they fail to partition V.
/// Guard: |V| <= 6.
std::vector<VertexSet> bounded_components_brute(const MixedGraph& g);

/// Exhaustive search over spanning trees; Neither is backed by an explicit
/// partition found by enumerating all partitions of V. Guard: |E| <= 14.
PackingResult packing_brute(const Multigraph& m);

struct BalanceWitness {
  bool value = true;
  VertexId u = 0;
  VertexId v = 0;
  /// Private vertices of the side lacking a direction edge.
  VertexSet side;
};

/// Direct check of the definition over all pairs (H1, H2). Guard: |V| <= 7.
BalanceWitness direction_balanced_brute(const MixedGraph& g);

struct OracleReport {
  std::string predicate;
  std::string input_hash;
  nlohmann::json value;
  nlohmann::json witness;
};

nlohmann::json to_json(const OracleReport& r);

}  // namespace rigikit::oracle
