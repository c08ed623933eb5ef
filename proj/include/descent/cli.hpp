#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "descent/certificate.hpp"
#include "descent/cohomology.hpp"

namespace descent::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::optional<unsigned> s;
  long ell = 1;
  std::string backend = "symbolic";
  std::optional<unsigned> conductor;
  std::optional<long> generator;
  std::optional<std::string> gamma;  // rational literal or "symbolic"
  std::string out;
  unsigned max_s = 12;
  bool include_noncoprime = false;
  std::string table;
};

/// Table document: {"backend": "symbolic"|"cyclotomic", "s", "conductor",
/// "generator", "table": [[entry, ...], ...]}. Symbolic entries are monomial
/// strings ("gamma^2"); cyclotomic entries are a rational or a list of
/// rational coordinates in the power basis of zeta.
Cocycle2 cocycle_from_json(const Json& doc);

int cmd_verify_cocycle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_roquette(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_crossed(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace descent::cli
