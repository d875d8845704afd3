#pragma once

// The itcalc command line: one invocation, one JSON report.

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace itcalc::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

struct Options {
  std::string command;
  std::string algebra;
  std::string b_algebra;
  std::vector<std::string> modules;  // .mod files
  std::string module;
  std::string target;
  std::string generator = "A";
  std::string family = "nakayama-all";
  std::string b_family = "nakayama-all";
  std::string complex;
  int degree = 1;
  int length = 10;
  std::optional<int> horizon;
  /// Decimal or 0x-prefixed integer, or "random".
  std::optional<std::string> seed;
};

struct Outcome {
  int exit_code = kExitOk;
  nlohmann::json report;
};

const std::vector<std::string>& commands();

/// Never throws; failures become an "error" object in the report.
Outcome run(const Options& opts);

/// Re-runs the invocation recorded in `stored`. Exit code 2 when the fresh
/// report differs from the stored one.
Outcome replay(const nlohmann::json& stored);

/// Aligned human-readable rendering of a report.
std::string render_pretty(const nlohmann::json& report);

/// Horizon from ITCALC_HORIZON, if set.
std::optional<int> horizon_from_env();

}  // namespace itcalc::cli
