#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"

namespace fuzzyces::cli {

enum ExitCode : int { exit_ok = 0, exit_config = 1, exit_numeric = 2, exit_inconsistent = 3 };

/// Flat per-row table for CSV output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

struct CommandResult {
  std::string command;
  nlohmann::json body;
  Table table;
  int exit_code = exit_ok;
};

/// f- and eta-metric between two named sequences at truncation N.
CommandResult cmd_metric(const JobConfig& config, const std::string& x, const std::string& y);

/// Membership diagnostic of one named sequence over the N schedule.
CommandResult cmd_membership(const JobConfig& config, const std::string& x);

/// Runs the full verification suite. Exit code 3 if any experiment is
/// inconsistent.
CommandResult cmd_verify_paper(const JobConfig& config);

/// Axioms, the scaling inequality and Delta_2 for an Orlicz expression given
/// as JSON text, or for the configured space's function when absent.
CommandResult cmd_orlicz_check(const JobConfig& config, const std::optional<std::string>& expression);

nlohmann::json to_json(const harness::ExperimentResult& r);

}  // namespace fuzzyces::cli
