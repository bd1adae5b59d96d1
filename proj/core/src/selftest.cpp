#include "rigikit/selftest.hpp"

#include <algorithm>

#include "rigikit/bounded.hpp"
#include "rigikit/corpus.hpp"
#include "rigikit/graph_io.hpp"
#include "rigikit/json_report.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/packing.hpp"

namespace rigikit {

namespace {

constexpr std::size_t kMaxReportedMismatches = 20;

class Tally {
 public:
  explicit Tally(SelftestResult& out) : out_(out) {}

  void record(const std::string& name, bool ok, const MixedGraph& g, nlohmann::json oracle_value) {
    record(name, ok, graph_hash(g), graph_to_json(g), std::move(oracle_value));
  }

  void record(const std::string& name, bool ok, std::string hash, nlohmann::json input, nlohmann::json oracle_value) {
    auto it = std::find_if(out_.checks.begin(), out_.checks.end(), [&](const auto& c) { return c.name == name; });
    if (it == out_.checks.end()) {
      out_.checks.push_back({name, 0, 0});
      it = std::prev(out_.checks.end());
    }
    ++it->cases;
    if (ok) return;
    ++it->failures;
    if (out_.mismatches.size() < kMaxReportedMismatches)
      out_.mismatches.push_back({name, std::move(hash), std::move(oracle_value), std::move(input)});
  }

 private:
  SelftestResult& out_;
};

}  // namespace

bool SelftestResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.failures == 0; });
}

SelftestResult run_selftest(std::uint64_t seed, std::size_t samples) {
  SelftestResult out;
  Tally tally(out);
  const RankOptions options{seed, 3};

  std::vector<MixedGraph> graphs = corpus::exhaustive_mixed(3);
  const auto random = corpus::random_mixed_batch(seed, samples, 4, 6, 14);
  graphs.insert(graphs.end(), random.begin(), random.end());

  for (const MixedGraph& g : graphs) {
    const std::size_t counted = oracle::rank_by_counts(g);
    tally.record("rank", generic_rank(g, options) == counted, g, counted);
    tally.record("bounded routes", is_bounded_by_packing(g, options) == is_bounded_by_augmentation(g, options), g,
                 is_bounded_by_augmentation(g, options));
    const auto blocks = oracle::bounded_components_brute(g);
    tally.record("bounded components", bounded_components(g, options).blocks == blocks, g, blocks);
    const auto balance = oracle::direction_balanced_brute(g);
    tally.record("direction balance", is_direction_balanced(g).value == balance.value, g, balance.value);
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 4);
    const Multigraph m = corpus::random_multigraph(rng, n, static_cast<std::size_t>(rng() % 11));
    const PackingResult fast = spanning_tree_packing(m);
    const PackingResult brute = oracle::packing_brute(m);
    tally.record("packing", fast.verdict == brute.verdict && verify_packing(m, fast), "", to_json(m, fast),
                 std::string(to_string(brute.verdict)));
  }
  return out;
}

nlohmann::json to_json(const SelftestResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : r.mismatches) mismatches.push_back(oracle::to_json(m));
  return nlohmann::json{{"passed", r.passed()}, {"checks", std::move(checks)}, {"mismatches", std::move(mismatches)}};
}

}  // namespace rigikit
