#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyces/functionals.hpp"
#include "fuzzyces/harness.hpp"
#include "fuzzyces/orlicz.hpp"
#include "fuzzyces/sequence.hpp"

namespace fuzzyces::cli {

/// Invalid configuration. The message starts with the offending field path,
/// e.g. "sequences.X.step: expected a number".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct SpaceConfig {
  SpaceKind kind = SpaceKind::cp(1.0);
  std::size_t gap = 1;    // m
  std::size_t order = 1;  // n
  OrliczSpec orlicz = OrliczSpec::identity();
};

struct NumericConfig {
  std::size_t n = 100;
  std::vector<std::size_t> schedule;  // empty: N, 2N, 4N
  double tol = 1e-10;
  double rho_ref = 1.0;

  std::vector<std::size_t> effective_schedule() const;
};

struct OrliczCheckConfig {
  std::vector<double> grid;     // axiom grid
  std::vector<double> lambdas;  // scaling factors in (0, 1)
  std::vector<double> probes;   // Delta_2 probe points
  std::vector<double> factors;  // Delta_2 factors L > 1
  int doublings = 3;
};

struct JobConfig {
  std::map<std::string, FuzzySeq> sequences;
  SpaceConfig space;
  NumericConfig numeric;
  harness::SuiteConfig suite;
  OrliczCheckConfig orlicz_check;
  std::uint64_t seed = 20110721;
};

/// Built-in defaults, used when no --config is given.
JobConfig default_config();

/// Parses and validates a whole config document. Throws ConfigError.
JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);

/// {"power": p}, {"identity": {}}, {"cube": {}}, {"exp_minus_one": {}},
/// {"compose": [outer, inner]}, {"sum": [a, b]}.
OrliczSpec parse_orlicz(const nlohmann::json& node, const std::string& path);
nlohmann::json orlicz_to_json(const OrliczSpec& m);

/// Command-line overrides, applied after parsing and validated the same way.
void apply_overrides(JobConfig& config, std::optional<long long> n, std::optional<double> tol,
                     std::optional<std::uint64_t> seed);

}  // namespace fuzzyces::cli
