#pragma once

#include <nlohmann/json.hpp>

#include "rigikit/bounded.hpp"
#include "rigikit/decide.hpp"
#include "rigikit/matroid.hpp"
#include "rigikit/packing.hpp"
#include "rigikit/reduce.hpp"

namespace rigikit {

// Report documents. Edges are spelled {"u","v","kind"} with vertex names,
// vertex sets as sorted name lists.

nlohmann::json to_json(const ReductionStep& s);
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const MixedGraph& g, const ConditionsReport& r);
nlohmann::json to_json(const MatroidView& m);
nlohmann::json to_json(const MixedGraph& g, const BoundedDecomposition& d);
nlohmann::json to_json(const Multigraph& m, const PackingResult& r);

}  // namespace rigikit
