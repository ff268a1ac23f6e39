#pragma once

// JSON renderings shared by the CLI and tests.  Doubles are rounded to six
// decimals before insertion so dumps are byte-stable; nlohmann::json objects
// keep keys sorted, which makes whole documents deterministic.

#include <json.hpp>

#include "evret/evaluate.hpp"
#include "evret/truth_value.hpp"

namespace evret {

double round6(double v);
std::string fixed6(double v);

// {"scalar": v} | {"interval": [lo, hi]} | {"fuzzy": {"grid": G, "mu": [...]}}
nlohmann::json truth_to_json(const TruthValue& tv);
TruthValue truth_from_json(const nlohmann::json& j);

// Top-level array of records {node, kind, label, op, inputs, output, pruned,
// actions, children}; output is null for pruned-skip stubs.
nlohmann::json trace_to_json(const EvaluationTrace& t);
EvaluationTrace trace_from_json(const nlohmann::json& j);

}  // namespace evret
