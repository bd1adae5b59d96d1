#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rigikit/graph.hpp"

// Deterministic graph collections shared by the test suites, the selftest
// command and the benchmarks. Vertices are named "a", "b", ...
namespace rigikit::corpus {

/// Every mixed graph on 1..max_vertices labelled vertices: each pair carries
/// nothing, a direction edge, a length edge or both.
std::vector<MixedGraph> exhaustive_mixed(std::size_t max_vertices = 4);

/// n vertices and a uniform number of typed edges in [n - 1, min(max_edges,
/// n(n - 1))], the edges drawn uniformly without replacement.
MixedGraph random_mixed(std::mt19937_64& rng, std::size_t n, std::size_t max_edges = 20);

/// `count` graphs with vertex counts uniform in [min_vertices, max_vertices].
std::vector<MixedGraph> random_mixed_batch(std::uint64_t seed, std::size_t count, std::size_t min_vertices = 5,
                                           std::size_t max_vertices = 8, std::size_t max_edges = 20);

/// Every loop-free multigraph on 1..max_vertices vertices with pair
/// multiplicities up to max_multiplicity and at most max_edges edges.
std::vector<Multigraph> exhaustive_multigraphs(std::size_t max_vertices, std::size_t max_multiplicity,
                                               std::size_t max_edges);

/// Random multigraph: `edges` endpoints pairs drawn uniformly among distinct
/// vertex pairs (repeats allowed).
Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t edges);

/// A uniformly random relabelling of the vertices.
MixedGraph relabel(const MixedGraph& g, std::mt19937_64& rng);

}  // namespace rigikit::corpus
