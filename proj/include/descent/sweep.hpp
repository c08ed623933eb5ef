#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "descent/roquette.hpp"

namespace descent {

struct SweepRow {
  unsigned s = 0;
  long ell = 0;
  bool coprime = false;
  bool ok = false;
  std::vector<std::optional<long>> beta_exponents;
  std::string verdict;  // "pass", "not-birational" or "fail:<stage>"
};

/// Runs the symbolic pipeline for 2 <= s <= max_s and every ell in [1, s)
/// (coprime ones only unless include_noncoprime). Rows come back ordered by
/// (s, ell) regardless of `workers`; 0 workers means hardware concurrency.
std::vector<SweepRow> run_sweep(unsigned max_s, bool include_noncoprime, unsigned workers = 0);

/// Plain-text table; deterministic for a given row set.
std::string format_sweep(const std::vector<SweepRow>& rows);

/// A sweep passes when every coprime row passes and every non-coprime row
/// is rejected as not birational.
bool sweep_passed(const std::vector<SweepRow>& rows);

}  // namespace descent
