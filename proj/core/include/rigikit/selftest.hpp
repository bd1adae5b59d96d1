#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigikit/oracle.hpp"

namespace rigikit {

struct SelftestCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;
  /// The first few disagreements, with the oracle's value.
  std::vector<oracle::OracleReport> mismatches;

  bool passed() const;
};

/// Fast routines against the oracles on all graphs with at most three
/// vertices plus `samples` seeded random graphs on 4 to 6 vertices.
SelftestResult run_selftest(std::uint64_t seed, std::size_t samples = 300);

nlohmann::json to_json(const SelftestResult& r);

}  // namespace rigikit
