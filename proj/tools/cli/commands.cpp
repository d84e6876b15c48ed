#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzyces/orlicz.hpp"

namespace fuzzyces::cli {

using nlohmann::json;

namespace {

const FuzzySeq& lookup(const JobConfig& config, const std::string& name, const char* role) {
  const auto it = config.sequences.find(name);
  if (it == config.sequences.end())
    throw ConfigError(std::string("sequences.") + name, std::string("unknown sequence for ") + role);
  return it->second;
}

json space_json(const SpaceConfig& s) {
  json j{{"family", s.kind.family_name()}, {"m", s.gap}, {"n", s.order}, {"orlicz", orlicz_to_json(s.orlicz)}};
  if (s.kind.has_exponent()) j["p"] = s.kind.p;
  return j;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const harness::ExperimentResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json obs = json::array();
  for (const auto& o : r.observations) obs.push_back({{"input", o.input}, {"quantity", o.quantity}, {"value", number_or_null(o.value)}});
  return {{"name", r.name},         {"claim", r.claim}, {"parameters", params},
          {"observations", obs},    {"notes", r.notes}, {"verdict", harness::to_string(r.verdict)}};
}

CommandResult cmd_metric(const JobConfig& config, const std::string& x, const std::string& y) {
  const auto& sx = lookup(config, x, "X");
  const auto& sy = lookup(config, y, "Y");
  const auto& s = config.space;
  const std::size_t n = config.numeric.n;

  const auto parts = f_metric_parts(s.kind, s.orlicz, s.gap, s.order, sx, sy, n, config.numeric.tol);
  const double eta = eta_metric(s.kind, s.orlicz, sx, sy, n, config.numeric.tol);

  CommandResult r;
  r.command = "metric";
  r.body = {{"X", x},
            {"Y", y},
            {"space", space_json(s)},
            {"numeric", {{"N", n}, {"tol", config.numeric.tol}}},
            {"f_metric", {{"head", parts.head}, {"tail", parts.tail}, {"total", parts.total()}}},
            {"eta_metric", eta}};
  r.table.columns = {"quantity", "value"};
  r.table.rows = {{"f_head", parts.head}, {"f_tail", parts.tail}, {"f_total", parts.total()}, {"eta", eta}};
  return r;
}

CommandResult cmd_membership(const JobConfig& config, const std::string& x) {
  const auto& sx = lookup(config, x, "X");
  const auto& s = config.space;
  const auto schedule = config.numeric.effective_schedule();
  DiagnosticOptions options = config.suite.diagnostic;
  options.tol = config.numeric.tol;

  const auto report = membership_diagnostic(s.kind, s.orlicz, s.gap, s.order, sx, schedule, config.numeric.rho_ref, options);

  CommandResult r;
  r.command = "membership";
  json rows = json::array();
  r.table.columns = {"N", "phi", "rho_star"};
  for (std::size_t j = 0; j < report.schedule.size(); ++j) {
    const json phi = number_or_null(report.phi_values[j]);
    const json rho = number_or_null(report.luxemburg_values[j]);
    rows.push_back({{"N", report.schedule[j]}, {"phi", phi}, {"rho_star", rho}});
    r.table.rows.push_back({report.schedule[j], phi, rho});
  }
  r.body = {{"sequence", x},
            {"space", space_json(s)},
            {"numeric",
             {{"N_schedule", schedule},
              {"tol", options.tol},
              {"rho_ref", config.numeric.rho_ref},
              {"stable_relative_change", options.thresholds.stable_relative_change},
              {"growth_per_doubling", options.thresholds.growth_per_doubling}}},
            {"rows", rows},
            {"verdict", to_string(report.verdict)}};
  return r;
}

CommandResult cmd_verify_paper(const JobConfig& config) {
  const auto results = harness::run_suite(config.suite);

  CommandResult r;
  r.command = "verify-paper";
  json experiments = json::array();
  std::size_t counts[3] = {0, 0, 0};
  r.table.columns = {"experiment", "input", "quantity", "value"};
  for (const auto& e : results) {
    experiments.push_back(to_json(e));
    ++counts[static_cast<int>(e.verdict)];
    for (const auto& o : e.observations) r.table.rows.push_back({e.name, o.input, o.quantity, number_or_null(o.value)});
    r.table.rows.push_back({e.name, "", "verdict", harness::to_string(e.verdict)});
  }
  r.body = {{"seed", config.suite.seed},
            {"experiments", experiments},
            {"summary",
             {{"consistent-with-paper", counts[0]}, {"inconsistent", counts[1]}, {"inconclusive", counts[2]}}}};
  r.exit_code = counts[static_cast<int>(harness::ExperimentVerdict::inconsistent)] > 0 ? exit_inconsistent : exit_ok;
  return r;
}

CommandResult cmd_orlicz_check(const JobConfig& config, const std::optional<std::string>& expression) {
  OrliczSpec m = config.space.orlicz;
  if (expression) {
    json node;
    try {
      node = json::parse(*expression);
    } catch (const json::parse_error& e) {
      throw ConfigError("orlicz-check expression", std::string("malformed JSON: ") + e.what());
    }
    m = parse_orlicz(node, "orlicz-check expression");
  }
  const auto& oc = config.orlicz_check;

  const auto axioms = check_axioms(m, oc.grid);
  const bool scaling = check_scaling_inequality(m, oc.lambdas, oc.grid);
  double scaling_gap = 0.0;  // min over probes of lambda M(x) - M(lambda x)
  bool first = true;
  for (double l : oc.lambdas) {
    for (double x : oc.grid) {
      const double g = l * m(x) - m(l * x);
      scaling_gap = first ? g : std::min(scaling_gap, g);
      first = false;
    }
  }
  const auto d2 = check_delta2(m, oc.probes, oc.factors, oc.doublings);

  CommandResult r;
  r.command = "orlicz-check";
  json per = json::array();
  r.table.columns = {"check", "value"};
  r.table.rows = {{"zero_at_zero", axioms.zero_at_zero},       {"monotone", axioms.monotone},
                  {"midpoint_convex", axioms.midpoint_convex}, {"positive", axioms.positive},
                  {"divergent_trend", axioms.divergent_trend}, {"scaling_inequality", scaling},
                  {"scaling_min_gap", scaling_gap}};
  for (const auto& f : d2.per_factor) {
    json k = f.k ? json(*f.k) : json(nullptr);
    per.push_back({{"L", f.factor}, {"k_by_range", f.k_by_range}, {"K", k}});
    r.table.rows.push_back({"delta2_K(L=" + json(f.factor).dump() + ")", k});
  }
  const json k = d2.k ? json(*d2.k) : json(nullptr);
  r.table.rows.push_back({"delta2_K", k});
  r.body = {{"orlicz", orlicz_to_json(m)},
            {"describe", m.describe()},
            {"axioms",
             {{"zero_at_zero", axioms.zero_at_zero},
              {"monotone", axioms.monotone},
              {"midpoint_convex", axioms.midpoint_convex},
              {"positive", axioms.positive},
              {"divergent_trend", axioms.divergent_trend},
              {"all", axioms.all()}}},
            {"scaling_inequality", {{"holds", scaling}, {"min_gap", scaling_gap}, {"lambdas", oc.lambdas}}},
            {"grid", oc.grid},
            {"delta2",
             {{"K", k},
              {"per_factor", per},
              {"probe_min", d2.probe_min},
              {"probe_max", d2.probe_max},
              {"doublings", oc.doublings}}}};
  return r;
}

}  // namespace fuzzyces::cli
