#include "cli/app.hpp"

#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"
#include "fuzzyces/error.hpp"

namespace fuzzyces::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy-number Cesaro difference sequence spaces: metrics, membership diagnostics and checks", "fuzzyces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::optional<long long> n;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;

  app.add_option("--config", config_path, "JSON job config")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--N", n, "Truncation N (resets the schedule to N, 2N, 4N)");
  app.add_option("--tol", tol, "Luxemburg bisection tolerance");
  app.add_option("--seed", seed, "Seed for random sequences");

  std::string metric_x, metric_y;
  auto* metric = app.add_subcommand("metric", "f- and eta-metric between two sequences");
  metric->add_option("X", metric_x, "Sequence name")->required();
  metric->add_option("Y", metric_y, "Sequence name")->required();

  std::string member_x;
  auto* membership = app.add_subcommand("membership", "Bounded/divergent trend diagnostic of one sequence");
  membership->add_option("X", member_x, "Sequence name")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the full verification suite");

  std::optional<std::string> expression;
  auto* orlicz = app.add_subcommand("orlicz-check", "Orlicz axioms, scaling inequality and Delta_2 constant");
  orlicz->add_option("expr", expression, "Orlicz expression as JSON, e.g. '{\"power\": 2}'");

  for (auto* sub : {metric, membership, verify, orlicz}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_config;
  }

  CommandResult result;
  try {
    JobConfig config = config_path.empty() ? default_config() : load_config(config_path);
    apply_overrides(config, n, tol, seed);
    if (*metric) {
      result = cmd_metric(config, metric_x, metric_y);
    } else if (*membership) {
      result = cmd_membership(config, member_x);
    } else if (*verify) {
      result = cmd_verify_paper(config);
    } else {
      result = cmd_orlicz_check(config, expression);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return exit_numeric;
  } catch (const OutOfRange& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const InvalidInput& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::overflow_error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return exit_numeric;
  }

  const std::string text = format == "csv" ? render_csv(result.table) : render_json(result, utc_timestamp());
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "config error: --out: cannot write '" << out_path << "'\n";
      return exit_config;
    }
    file << text;
  }
  return result.exit_code;
}

}  // namespace fuzzyces::cli
