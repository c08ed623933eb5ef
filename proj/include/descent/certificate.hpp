#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "descent/roquette.hpp"

namespace descent {

using Json = nlohmann::ordered_json;

// Certificate document:
// {
//   "status": "certified" | "failed",
//   "spec": {"s", "ell", "backend", "gamma"[, "conductor", "generator"]},
//   "beta": [exponent of gamma per index], "beta_values": [...],
//   "k", "m",
//   "diagram": {"verdict", "lambda"},
//   "lattice": {"det", "verdict", "reduced"},
//   "theta1_inverse": [[...]],
//   "inverse_cross_check": bool,
//   "stages": [{"name", "pass", "millis"[, "detail"]}]
// }
// Failure reports carry "failed_stage" and "failure" and whichever sections
// were computed before the failing stage.

Json spec_to_json(const ThetaSpec& spec);
/// Throws UsageError on a malformed or inconsistent spec section.
ThetaSpec spec_from_json(const Json& j);

/// Document for a pipeline run, certified or failed.
Json pipeline_to_json(const ThetaSpec& spec, const PipelineResult& result);

struct ReplayResult {
  bool identical = false;
  std::string difference;  // first differing field path
};

/// Re-runs the pipeline from the document's spec and compares every verdict
/// field (stage timings excluded).
ReplayResult revalidate_certificate(const Json& document);

}  // namespace descent
