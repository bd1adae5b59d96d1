// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "rigikit/bounded.hpp"
#include "rigikit/corpus.hpp"
#include "rigikit/decide.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/oracle.hpp"
#include "rigikit/packing.hpp"
#include "rigikit/realize.hpp"
#include "rigikit/reduce.hpp"

using namespace rigikit;
using namespace rigikit::test;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr std::size_t kRandomGraphs = 10'000;
constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr double kRankBudgetSeconds = 120.0;
constexpr std::size_t kFrameworks = 1'000;
constexpr std::size_t kMultigraphRandom = 3'000;
constexpr std::size_t kSlopeInstances = 100;
constexpr double kSlopeBudgetSeconds = 10.0;
constexpr std::size_t kMaxSampledSets = 64;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<MixedGraph>& corpus_graphs() {
  static const std::vector<MixedGraph> graphs = [] {
    std::vector<MixedGraph> all = corpus::exhaustive_mixed(4);
    const auto random = corpus::random_mixed_batch(kCorpusSeed, kRandomGraphs, 5, 8);
    all.insert(all.end(), random.begin(), random.end());
    return all;
  }();
  return graphs;
}

std::string where(const MixedGraph& g) { return " on " + serialize_graph(g); }

void rank_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for (const MixedGraph& g : corpus_graphs()) {
    ++n;
    const std::size_t fast = generic_rank(g);
    const std::size_t counted = oracle::rank_by_counts(g);
    if (fast != counted) o.fail("rank " + std::to_string(fast) + " vs " + std::to_string(counted) + where(g));
  }
  const double s = seconds_since(t0);
  if (s >= kRankBudgetSeconds) o.fail("took " + std::to_string(s) + " s");
  o.detail << (o.pass ? "" : "; ") << n << " graphs in " << s << " s";
}

void dual_route_rank(Outcome& o) {
  std::mt19937_64 rng(kCorpusSeed + 2);
  const auto& graphs = corpus_graphs();
  const std::size_t first_random = graphs.size() - kRandomGraphs;
  for (std::size_t i = 0; i < kFrameworks; ++i) {
    const MixedGraph& g = graphs[first_random + i];
    Framework p = random_generic_framework(g, rng());
    for (Point& x : p.coords) {
      x.x /= Rational(1 + static_cast<long>(rng() % 997));
      x.y /= Rational(1 + static_cast<long>(rng() % 991));
    }
    const std::size_t exact = numeric_rank(rigidity_matrix(p));
    if (exact != generic_rank(g)) o.fail("exact rank " + std::to_string(exact) + where(g));
  }
  o.detail << (o.pass ? "" : "; ") << kFrameworks << " frameworks";
}

void bounded_agreement(Outcome& o) {
  std::size_t brute = 0;
  for (const MixedGraph& g : corpus_graphs()) {
    if (is_bounded_by_packing(g) != is_bounded_by_augmentation(g)) o.fail("routes disagree" + where(g));
    if (g.vertex_count() <= oracle::kMaxBruteVertices) {
      ++brute;
      if (bounded_components(g).blocks != oracle::bounded_components_brute(g)) o.fail("components differ" + where(g));
    }
  }
  o.detail << (o.pass ? "" : "; ") << corpus_graphs().size() << " route checks, " << brute << " component checks";
}

void packing_certificates(Outcome& o) {
  std::vector<Multigraph> ms = corpus::exhaustive_multigraphs(4, 3, 12);
  for (const auto& extra : {corpus::exhaustive_multigraphs(5, 2, 12), corpus::exhaustive_multigraphs(6, 1, 12)})
    for (const Multigraph& m : extra)
      if (m.vertex_count() >= 5) ms.push_back(m);
  std::mt19937_64 rng(kCorpusSeed + 4);
  for (std::size_t i = 0; i < kMultigraphRandom; ++i) {
    const std::size_t n = 5 + rng() % 2;
    ms.push_back(corpus::random_multigraph(rng, n, rng() % 13));
  }
  std::size_t trees = 0, violators = 0;
  for (const Multigraph& m : ms) {
    const PackingResult fast = spanning_tree_packing(m);
    if (fast.verdict != oracle::packing_brute(m).verdict) {
      o.fail("verdict differs on a multigraph with " + std::to_string(m.vertex_count()) + " vertices, " +
             std::to_string(m.edge_count()) + " edges");
    }
    if (!verify_packing(m, fast)) o.fail("certificate does not verify");
    trees += fast.trees.has_value();
    violators += fast.violator.has_value();
  }
  o.detail << (o.pass ? "" : "; ") << ms.size() << " multigraphs, " << trees << " tree pairs, " << violators
           << " violators";
}

bool irreducible_conditions(const MixedGraph& h) {
  return is_2connected(h).value && is_direction_balanced(h).value && is_redundantly_rigid(h).value;
}

void decision_fixtures(Outcome& o) {
  const auto expect = [&](const char* stem, Answer a, std::string_view cert) {
    const MixedGraph g = fixture(stem);
    const Verdict v = decide_global_rigidity(g);
    if (v.answer != a || certificate_name(v.certificate) != cert)
      o.fail(std::string(stem) + " gave " + std::string(to_string(v.answer)) + " " +
             std::string(certificate_name(v.certificate)));
    if (auto bad = check_certificate(g, v)) o.fail(std::string(stem) + ": " + *bad);
  };
  constexpr Answer YES = Answer::AllGenericGloballyRigid;
  constexpr Answer NO = Answer::NotAll;
  expect("digon", YES, "RigidWithOneLengthEdge");
  expect("hat", YES, "RigidWithOneLengthEdge");
  expect("mc5", YES, "IrreducibleAllConditions");
  expect("lolly", NO, "Not2Connected");
  for (const char* stem : {"tri_l", "k4_l", "k4_d", "pend"}) expect(stem, NO, "NotRigid");

  const MixedGraph bowtie = fixture("bowtie_mix");
  const ReductionTrace t = reduce_fully(bowtie);
  const bool computed = is_rigid(bowtie) && (t.result.length_count() == 1 || irreducible_conditions(t.result));
  if ((decide_global_rigidity(bowtie).answer == YES) != computed) o.fail("bowtie_mix disagrees with its conditions");

  DecideOptions slow;
  slow.single_length_fast_path = false;
  const MixedGraph hat = fixture("hat");
  const Verdict fast_v = decide_global_rigidity(hat);
  const Verdict slow_v = decide_global_rigidity(hat, slow);
  const auto* fc = std::get_if<cert::RigidWithOneLengthEdge>(&fast_v.certificate);
  const auto* sc = std::get_if<cert::RigidWithOneLengthEdge>(&slow_v.certificate);
  if (fast_v.answer != YES || !fc || fc->via_reduction) o.fail("hat fast path");
  if (slow_v.answer != YES || !sc || !sc->via_reduction) o.fail("hat reduction route");
  if (check_certificate(hat, slow_v)) o.fail("hat reduction certificate");
  o.detail << (o.pass ? "" : "; ") << "10 fixtures, hat by both routes, bowtie_mix "
           << (computed ? "YES" : "NO");
}

void sparse_crosscheck(Outcome& o) {
  std::size_t n = 0;
  for (const MixedGraph& g : corpus_graphs()) {
    if (g.edge_count() + 1 > 2 * g.vertex_count()) continue;
    ++n;
    const Verdict s = decide_sparse(g);
    const Verdict f = decide_global_rigidity(g);
    if (s.answer != f.answer) o.fail("answers differ" + where(g));
    if (check_certificate(g, s)) o.fail("sparse certificate" + where(g));
  }
  o.detail << (o.pass ? "" : "; ") << n << " sparse graphs";
}

void m_connectivity_property(Outcome& o) {
  std::size_t n = 0;
  for (const MixedGraph& g : corpus_graphs()) {
    if (g.vertex_count() < 2 || !is_rigid(g) || !is_direction_irreducible(g)) continue;
    if (!is_2connected(g).value || !is_direction_balanced(g).value) continue;
    ++n;
    if (is_m_connected(g) != is_redundantly_rigid(g).value) o.fail("M-connected vs redundantly rigid" + where(g));
  }
  o.detail << (o.pass ? "" : "; ") << n << " qualifying rigid graphs";
}

void cross_edge_property(Outcome& o) {
  std::mt19937_64 rng(kCorpusSeed + 8);
  std::size_t graphs = 0, sets = 0;
  for (const MixedGraph& g : corpus_graphs()) {
    if (!direction_independent(g).independent) continue;
    const auto blocks = bounded_components(g).blocks;
    const std::size_t k = blocks.size();
    if (k < 2) continue;
    ++graphs;
    std::vector<std::size_t> block_of(g.vertex_count());
    for (std::size_t i = 0; i < k; ++i)
      for (VertexId v : blocks[i]) block_of[v] = i;
    const auto check = [&](std::uint64_t mask) {
      ++sets;
      std::size_t cross = 0;
      for (const Edge& e : g.edges()) {
        const std::size_t a = block_of[e.u], b = block_of[e.v];
        if (a != b && (mask >> a & 1) && (mask >> b & 1)) ++cross;
      }
      const std::size_t s = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (cross > 2 * s - 3) o.fail(std::to_string(cross) + " cross edges among " + std::to_string(s) + where(g));
    };
    if (k <= 6) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask)
        if (__builtin_popcountll(mask) >= 2) check(mask);
    } else {
      check((std::uint64_t{1} << k) - 1);
      for (std::size_t i = 0; i < kMaxSampledSets; ++i) {
        std::uint64_t mask = rng() & ((std::uint64_t{1} << k) - 1);
        if (__builtin_popcountll(mask) >= 2) check(mask);
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << sets << " sets over " << graphs << " graphs";
}

void slope_realisation(Outcome& o) {
  const auto t0 = Clock::now();
  const SlopeInstance tri = slope_instance_from_json(nlohmann::json::parse(read_data("triangle_slopes.json")));
  const Framework p = realize_from_slopes(tri);
  std::set<std::pair<Rational, Rational>> got;
  for (const Point& x : p.coords) got.insert({x.x, x.y});
  const std::set<std::pair<Rational, Rational>> want{{0, 0}, {2, 0}, {1, 1}};
  if (got != want) o.fail("triangle realisation differs");

  for (std::uint64_t seed = 0; seed < kSlopeInstances; ++seed) {
    const std::size_t n = 3 + seed % 8;
    const MixedGraph with_length = random_minimally_rigid(n, seed, 1);
    const MixedGraph g = with_length.without_edge(with_length.length_edges().front());
    const Framework truth = random_generic_framework(g, seed + 1);
    SlopeInstance in;
    in.graph = g;
    bool vertical = false;
    for (const auto& s : measurements(truth).values) {
      vertical = vertical || !s;
      in.slopes.push_back(s.value_or(0));
    }
    if (vertical) {
      o.fail("vertical edge in a generic instance");
      continue;
    }
    in.x0 = 0;
    in.y0 = static_cast<VertexId>(1 + seed % (n - 1));
    in.z0 = static_cast<VertexId>(n - 1);
    in.t2 = squared_norm(truth.at(in.x0) - truth.at(in.y0));
    const Framework a = realize_from_slopes(in, seed);
    const Framework b = realize_from_slopes(in, seed + 7919);
    const auto m = measurements(a).values;
    for (std::size_t e = 0; e < m.size(); ++e)
      if (!m[e] || *m[e] != in.slopes[e]) o.fail("slope violated, instance " + std::to_string(seed));
    if (a.at(in.z0) != Point{0, 0}) o.fail("z0 not pinned, instance " + std::to_string(seed));
    if (squared_norm(a.at(in.x0) - a.at(in.y0)) != in.t2) o.fail("distance violated, instance " + std::to_string(seed));
    if (a.coords != b.coords) o.fail("seed dependence, instance " + std::to_string(seed));
    if (!are_congruent(a.coords, truth.coords)) o.fail("not unique up to sign, instance " + std::to_string(seed));
    std::vector<Point> flipped;
    for (const Point& x : a.coords) flipped.push_back(-x);
    if (!are_equivalent(g, a.coords, flipped)) o.fail("negation not equivalent, instance " + std::to_string(seed));
  }
  const double s = seconds_since(t0);
  if (s >= kSlopeBudgetSeconds) o.fail("took " + std::to_string(s) + " s");
  o.detail << (o.pass ? "" : "; ") << "triangle plus " << kSlopeInstances << " instances in " << s << " s";
}

void reduction_soundness(Outcome& o) {
  const ReductionTrace hat = reduce_fully(fixture("hat"));
  if (hat.result != fixture("digon")) o.fail("hat does not reduce to digon");
  std::size_t steps = 0;
  for (const MixedGraph& g : corpus_graphs()) {
    const ReductionTrace t = reduce_fully(g);
    steps += t.steps.size();
    if (auto bad = verify_trace(g, t)) o.fail(*bad + where(g));
  }
  o.detail << (o.pass ? "" : "; ") << steps << " steps verified";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"rank oracle equivalence", rank_equivalence},
      {"exact rigidity-matrix rank", dual_route_rank},
      {"boundedness routes and components", bounded_agreement},
      {"packing certificates", packing_certificates},
      {"decision fixtures", decision_fixtures},
      {"sparse cross-check", sparse_crosscheck},
      {"M-connectivity vs redundant rigidity", m_connectivity_property},
      {"cross edges between bounded components", cross_edge_property},
      {"realisation from slopes", slope_realisation},
      {"reduction soundness", reduction_soundness},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
