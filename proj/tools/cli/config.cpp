#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "fuzzyces/error.hpp"

namespace fuzzyces::cli {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_object(const json& node, const std::string& path) {
  if (!node.is_object()) throw ConfigError(path, "expected an object");
}

void reject_unknown(const json& node, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : node.items()) {
    if (!allowed.count(key)) throw ConfigError(child(path, key), "unknown field");
  }
}

double number(const json& node, const std::string& path) {
  if (!node.is_number()) throw ConfigError(path, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

std::size_t count(const json& node, const std::string& path, std::size_t min) {
  if (!node.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto v = node.get<long long>();
  if (v < static_cast<long long>(min)) throw ConfigError(path, "must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

bool boolean(const json& node, const std::string& path) {
  if (!node.is_boolean()) throw ConfigError(path, "expected true or false");
  return node.get<bool>();
}

std::string text(const json& node, const std::string& path) {
  if (!node.is_string()) throw ConfigError(path, "expected a string");
  return node.get<std::string>();
}

std::vector<double> numbers(const json& node, const std::string& path) {
  if (!node.is_array() || node.empty()) throw ConfigError(path, "expected a non-empty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(number(node[i], index(path, i)));
  return out;
}

std::vector<std::size_t> schedule(const json& node, const std::string& path) {
  if (!node.is_array() || node.empty()) throw ConfigError(path, "expected a non-empty array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(count(node[i], index(path, i), 1));
    if (i > 0 && out[i] <= out[i - 1]) throw ConfigError(index(path, i), "schedule must be strictly increasing");
  }
  return out;
}

double exponent(const json& node, const std::string& path) {
  const double p = number(node, path);
  if (p < 1.0) throw ConfigError(path, "exponent p must be >= 1");
  return p;
}

double positive(const json& node, const std::string& path) {
  const double v = number(node, path);
  if (!(v > 0.0)) throw ConfigError(path, "must be > 0");
  return v;
}

SpaceKind space_kind(const std::string& family, double p, const std::string& path) {
  try {
    return SpaceKind::parse(family, p);
  } catch (const InvalidInput& e) {
    throw ConfigError(path, e.what());
  }
}

FuzzyReal fuzzy_value(const json& node, const std::string& path) {
  if (node.is_number()) return FuzzyReal::crisp(number(node, path));
  if (!node.is_array() || node.empty()) throw ConfigError(path, "expected a number or an array of [alpha, lo, hi]");
  std::vector<FuzzyReal::Triple> triples;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& t = node[i];
    const std::string tp = index(path, i);
    if (!t.is_array() || t.size() != 3) throw ConfigError(tp, "expected [alpha, lo, hi]");
    triples.push_back({number(t[0], index(tp, 0)), number(t[1], index(tp, 1)), number(t[2], index(tp, 2))});
  }
  try {
    return FuzzyReal::from_triples(triples);
  } catch (const InvalidInput& e) {
    throw ConfigError(path, e.what());
  }
}

FuzzySeq paper_example(const json& node, const std::string& path, const std::string& name) {
  const std::string example = text(node.at("example"), child(path, "example"));
  const std::string which = node.contains("which") ? text(node["which"], child(path, "which")) : "X";
  if (which != "X" && which != "Y") throw ConfigError(child(path, "which"), "expected \"X\" or \"Y\"");
  harness::SequencePair pair = [&] {
    if (example == "3.1") return harness::linear_and_odd_preimage();
    if (example == "3.2") return harness::linear_and_square_interleave();
    if (example == "3.3") return harness::shrinking_and_widening_tents();
    throw ConfigError(child(path, "example"), "expected \"3.1\", \"3.2\" or \"3.3\"");
  }();
  const FuzzySeq& seq = which == "X" ? pair.x : pair.y;
  return FuzzySeq([seq](std::size_t k) { return seq.at(k); }, std::nullopt, name);
}

FuzzySeq sequence(const json& node, const std::string& path, const std::string& name) {
  expect_object(node, path);
  if (!node.contains("type")) throw ConfigError(child(path, "type"), "missing field");
  const std::string type = text(node["type"], child(path, "type"));

  if (type == "crisp-arithmetic") {
    reject_unknown(node, path, {"type", "start", "step"});
    const double start = node.contains("start") ? number(node["start"], child(path, "start")) : 0.0;
    const double step = node.contains("step") ? number(node["step"], child(path, "step")) : 1.0;
    return FuzzySeq([start, step](std::size_t k) { return FuzzyReal::crisp(start + step * static_cast<double>(k - 1)); },
                    std::nullopt, name);
  }
  if (type == "crisp-geometric") {
    reject_unknown(node, path, {"type", "start", "ratio"});
    const double start = node.contains("start") ? number(node["start"], child(path, "start")) : 1.0;
    const double ratio = node.contains("ratio") ? number(node["ratio"], child(path, "ratio")) : 0.5;
    return FuzzySeq(
        [start, ratio](std::size_t k) { return FuzzyReal::crisp(start * std::pow(ratio, static_cast<double>(k - 1))); },
        std::nullopt, name);
  }
  if (type == "triangular-family") {
    reject_unknown(node, path, {"type", "center", "spread_exponent"});
    const double center = node.contains("center") ? number(node["center"], child(path, "center")) : 0.0;
    const double s =
        node.contains("spread_exponent") ? number(node["spread_exponent"], child(path, "spread_exponent")) : 1.0;
    return FuzzySeq(
        [center, s](std::size_t k) {
          const double w = std::pow(static_cast<double>(k), -s);
          return FuzzyReal::triangular(center, w, w);
        },
        std::nullopt, name);
  }
  if (type == "paper-example") {
    reject_unknown(node, path, {"type", "example", "which"});
    if (!node.contains("example")) throw ConfigError(child(path, "example"), "missing field");
    return paper_example(node, path, name);
  }
  if (type == "explicit") {
    reject_unknown(node, path, {"type", "values", "pad_with_zero"});
    if (!node.contains("values")) throw ConfigError(child(path, "values"), "missing field");
    const auto& values = node["values"];
    const std::string vp = child(path, "values");
    if (!values.is_array()) throw ConfigError(vp, "expected an array of fuzzy values");
    std::vector<FuzzyReal> list;
    for (std::size_t i = 0; i < values.size(); ++i) list.push_back(fuzzy_value(values[i], index(vp, i)));
    const bool pad = node.contains("pad_with_zero") ? boolean(node["pad_with_zero"], child(path, "pad_with_zero")) : true;
    return FuzzySeq::from_values(std::move(list), pad, name);
  }
  if (type == "zero") {
    reject_unknown(node, path, {"type"});
    return FuzzySeq([](std::size_t) { return FuzzyReal(); }, std::nullopt, name);
  }
  if (type == "random-triangular") {
    reject_unknown(node, path, {"type", "seed"});
    const auto seed = node.contains("seed") ? count(node["seed"], child(path, "seed"), 0) : 1;
    return harness::random_triangular_sequence(seed, name);
  }
  throw ConfigError(child(path, "type"), "unknown sequence type '" + type + "'");
}

SpaceConfig space(const json& node, const std::string& path, SpaceConfig out) {
  expect_object(node, path);
  reject_unknown(node, path, {"family", "p", "m", "n", "orlicz"});
  const std::string family =
      node.contains("family") ? text(node["family"], child(path, "family")) : std::string(out.kind.family_name());
  const double p = node.contains("p") ? exponent(node["p"], child(path, "p")) : out.kind.p;
  out.kind = space_kind(family, p, child(path, "family"));
  if (node.contains("m")) out.gap = count(node["m"], child(path, "m"), 1);
  if (node.contains("n")) out.order = count(node["n"], child(path, "n"), 0);
  if (node.contains("orlicz")) out.orlicz = parse_orlicz(node["orlicz"], child(path, "orlicz"));
  return out;
}

void numeric(const json& node, const std::string& path, NumericConfig& out) {
  expect_object(node, path);
  reject_unknown(node, path, {"N", "N_schedule", "tol", "rho_ref"});
  if (node.contains("N")) out.n = count(node["N"], child(path, "N"), 1);
  if (node.contains("N_schedule")) out.schedule = schedule(node["N_schedule"], child(path, "N_schedule"));
  if (node.contains("tol")) out.tol = positive(node["tol"], child(path, "tol"));
  if (node.contains("rho_ref")) out.rho_ref = positive(node["rho_ref"], child(path, "rho_ref"));
}

void counterexample(const json& node, const std::string& path, harness::CounterexampleConfig& out) {
  expect_object(node, path);
  reject_unknown(node, path, {"family", "p", "m", "n", "orlicz", "N_schedule", "invert_expectation"});
  SpaceConfig s{out.kind, out.gap, out.order, out.orlicz};
  json space_part = json::object();
  for (const char* key : {"family", "p", "m", "n", "orlicz"}) {
    if (node.contains(key)) space_part[key] = node[key];
  }
  s = space(space_part, path, s);
  out.kind = s.kind;
  out.gap = s.gap;
  out.order = s.order;
  out.orlicz = s.orlicz;
  if (node.contains("N_schedule")) out.schedule = schedule(node["N_schedule"], child(path, "N_schedule"));
  if (node.contains("invert_expectation"))
    out.invert_expectation = boolean(node["invert_expectation"], child(path, "invert_expectation"));
}

void experiments(const json& node, const std::string& path, harness::SuiteConfig& out) {
  expect_object(node, path);
  reject_unknown(node, path,
                 {"solidity", "symmetry", "convergence_free", "inclusion", "closure", "metric_axioms",
                  "closed_form_k_max", "thresholds", "invert_expectation"});
  if (node.contains("solidity")) counterexample(node["solidity"], child(path, "solidity"), out.solidity);
  if (node.contains("symmetry")) counterexample(node["symmetry"], child(path, "symmetry"), out.symmetry);
  if (node.contains("convergence_free"))
    counterexample(node["convergence_free"], child(path, "convergence_free"), out.convergence_free);
  if (node.contains("invert_expectation")) {
    const bool v = boolean(node["invert_expectation"], child(path, "invert_expectation"));
    out.solidity.invert_expectation = out.symmetry.invert_expectation = out.convergence_free.invert_expectation = v;
  }
  if (node.contains("inclusion")) {
    const auto& n = node["inclusion"];
    const std::string p = child(path, "inclusion");
    expect_object(n, p);
    reject_unknown(n, p, {"orlicz", "m", "n", "p", "q", "N"});
    auto& c = out.inclusion;
    if (n.contains("orlicz")) c.orlicz = parse_orlicz(n["orlicz"], child(p, "orlicz"));
    if (n.contains("m")) c.gap = count(n["m"], child(p, "m"), 1);
    if (n.contains("n")) c.order = count(n["n"], child(p, "n"), 0);
    if (n.contains("p")) c.p = exponent(n["p"], child(p, "p"));
    if (n.contains("q")) c.q = exponent(n["q"], child(p, "q"));
    if (n.contains("N")) c.n_base = count(n["N"], child(p, "N"), 1);
    if (!(c.q > c.p)) throw ConfigError(child(p, "q"), "must exceed p");
  }
  if (node.contains("closure")) {
    const auto& n = node["closure"];
    const std::string p = child(path, "closure");
    expect_object(n, p);
    reject_unknown(n, p, {"outer", "m1", "m2", "family", "p", "m", "n", "N"});
    auto& c = out.closure;
    if (n.contains("outer")) c.outer = parse_orlicz(n["outer"], child(p, "outer"));
    if (n.contains("m1")) c.m1 = parse_orlicz(n["m1"], child(p, "m1"));
    if (n.contains("m2")) c.m2 = parse_orlicz(n["m2"], child(p, "m2"));
    const std::string family = n.contains("family") ? text(n["family"], child(p, "family"))
                                                     : std::string(c.kind.family_name());
    const double e = n.contains("p") ? exponent(n["p"], child(p, "p")) : c.kind.p;
    c.kind = space_kind(family, e, child(p, "family"));
    if (n.contains("m")) c.gap = count(n["m"], child(p, "m"), 1);
    if (n.contains("n")) c.order = count(n["n"], child(p, "n"), 0);
    if (n.contains("N")) c.n_base = count(n["N"], child(p, "N"), 1);
  }
  if (node.contains("metric_axioms")) {
    const auto& n = node["metric_axioms"];
    const std::string p = child(path, "metric_axioms");
    expect_object(n, p);
    reject_unknown(n, p, {"orlicz", "m", "n", "triples", "N", "tol", "triangle_slack"});
    auto& c = out.metric_axioms;
    if (n.contains("orlicz")) c.orlicz = parse_orlicz(n["orlicz"], child(p, "orlicz"));
    if (n.contains("m")) c.gap = count(n["m"], child(p, "m"), 1);
    if (n.contains("n")) c.order = count(n["n"], child(p, "n"), 0);
    if (n.contains("triples")) c.options.triples = count(n["triples"], child(p, "triples"), 1);
    if (n.contains("N")) c.options.count = count(n["N"], child(p, "N"), 1);
    if (n.contains("tol")) c.options.tol = positive(n["tol"], child(p, "tol"));
    if (n.contains("triangle_slack")) c.options.triangle_slack = number(n["triangle_slack"], child(p, "triangle_slack"));
  }
  if (node.contains("closed_form_k_max"))
    out.closed_form_k_max = count(node["closed_form_k_max"], child(path, "closed_form_k_max"), 1);
  if (node.contains("thresholds")) {
    const auto& n = node["thresholds"];
    const std::string p = child(path, "thresholds");
    expect_object(n, p);
    reject_unknown(n, p, {"stable_relative_change", "growth_per_doubling"});
    auto& t = out.diagnostic.thresholds;
    if (n.contains("stable_relative_change"))
      t.stable_relative_change = positive(n["stable_relative_change"], child(p, "stable_relative_change"));
    if (n.contains("growth_per_doubling")) {
      t.growth_per_doubling = number(n["growth_per_doubling"], child(p, "growth_per_doubling"));
      if (!(t.growth_per_doubling > 1.0)) throw ConfigError(child(p, "growth_per_doubling"), "must exceed 1");
    }
  }
}

void orlicz_check(const json& node, const std::string& path, OrliczCheckConfig& out) {
  expect_object(node, path);
  reject_unknown(node, path, {"grid", "lambdas", "probes", "factors", "doublings"});
  if (node.contains("grid")) {
    out.grid = numbers(node["grid"], child(path, "grid"));
    if (out.grid.size() < 3) throw ConfigError(child(path, "grid"), "needs at least 3 points");
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
      if (out.grid[i] < 0.0 || (i > 0 && out.grid[i] < out.grid[i - 1]))
        throw ConfigError(index(child(path, "grid"), i), "grid must be sorted and non-negative");
    }
  }
  if (node.contains("lambdas")) {
    out.lambdas = numbers(node["lambdas"], child(path, "lambdas"));
    for (std::size_t i = 0; i < out.lambdas.size(); ++i) {
      if (!(out.lambdas[i] > 0.0 && out.lambdas[i] < 1.0))
        throw ConfigError(index(child(path, "lambdas"), i), "must lie in (0, 1)");
    }
  }
  if (node.contains("probes")) {
    out.probes = numbers(node["probes"], child(path, "probes"));
    for (std::size_t i = 0; i < out.probes.size(); ++i) {
      if (!(out.probes[i] > 0.0)) throw ConfigError(index(child(path, "probes"), i), "must be > 0");
    }
  }
  if (node.contains("factors")) {
    out.factors = numbers(node["factors"], child(path, "factors"));
    for (std::size_t i = 0; i < out.factors.size(); ++i) {
      if (!(out.factors[i] > 1.0)) throw ConfigError(index(child(path, "factors"), i), "must exceed 1");
    }
  }
  if (node.contains("doublings"))
    out.doublings = static_cast<int>(count(node["doublings"], child(path, "doublings"), 1));
}

void sync_suite(JobConfig& c) {
  c.suite.seed = c.seed;
  c.suite.rho_ref = c.numeric.rho_ref;
  c.suite.diagnostic.tol = c.numeric.tol;
}

}  // namespace

std::vector<std::size_t> NumericConfig::effective_schedule() const {
  if (!schedule.empty()) return schedule;
  return {n, 2 * n, 4 * n};
}

JobConfig default_config() {
  JobConfig c;
  for (int i = 0; i < 10; ++i) c.orlicz_check.grid.push_back(0.5 * i);
  c.orlicz_check.lambdas = {0.1, 0.25, 0.5, 0.75, 0.9};
  c.orlicz_check.probes = {0.5, 1.0, 2.0, 4.0, 8.0};
  c.orlicz_check.factors = {2.0};
  sync_suite(c);
  return c;
}

OrliczSpec parse_orlicz(const json& node, const std::string& path) {
  if (!node.is_object() || node.size() != 1)
    throw ConfigError(path, "expected an object with exactly one key (power, identity, cube, exp_minus_one, compose, sum)");
  const auto it = node.begin();
  const std::string key = it.key();
  const json& value = it.value();
  const std::string p = child(path, key);
  if (key == "power") return OrliczSpec::power(exponent(value, p));
  if (key == "identity" || key == "cube" || key == "exp_minus_one") {
    if (!value.is_object() || !value.empty()) throw ConfigError(p, "expected {}");
    if (key == "identity") return OrliczSpec::identity();
    if (key == "cube") return OrliczSpec::cube();
    return OrliczSpec::exp_minus_one();
  }
  if (key == "compose" || key == "sum") {
    if (!value.is_array() || value.size() != 2) throw ConfigError(p, "expected an array of two Orlicz expressions");
    auto a = parse_orlicz(value[0], index(p, 0));
    auto b = parse_orlicz(value[1], index(p, 1));
    return key == "compose" ? OrliczSpec::compose(std::move(a), std::move(b)) : OrliczSpec::sum(std::move(a), std::move(b));
  }
  throw ConfigError(p, "unknown Orlicz function");
}

json orlicz_to_json(const OrliczSpec& m) {
  using V = OrliczSpec::Variant;
  switch (m.variant()) {
    case V::power: return {{"power", m.exponent()}};
    case V::identity: return {{"identity", json::object()}};
    case V::cube: return {{"cube", json::object()}};
    case V::exp_minus_one: return {{"exp_minus_one", json::object()}};
    case V::compose: return {{"compose", json::array({orlicz_to_json(m.first()), orlicz_to_json(m.second())})}};
    case V::sum: return {{"sum", json::array({orlicz_to_json(m.first()), orlicz_to_json(m.second())})}};
  }
  return json::object();
}

JobConfig parse_config(const json& doc) {
  JobConfig c = default_config();
  expect_object(doc, "config");
  reject_unknown(doc, "", {"sequences", "space", "numeric", "seed", "experiments", "orlicz_check", "orlicz"});
  if (doc.contains("seed")) c.seed = count(doc["seed"], "seed", 0);
  if (doc.contains("sequences")) {
    const auto& seqs = doc["sequences"];
    expect_object(seqs, "sequences");
    for (const auto& [name, node] : seqs.items()) c.sequences.emplace(name, sequence(node, child("sequences", name), name));
  }
  if (doc.contains("space")) c.space = space(doc["space"], "space", c.space);
  if (doc.contains("orlicz")) c.space.orlicz = parse_orlicz(doc["orlicz"], "orlicz");
  if (doc.contains("numeric")) numeric(doc["numeric"], "numeric", c.numeric);
  if (doc.contains("experiments")) experiments(doc["experiments"], "experiments", c.suite);
  if (doc.contains("orlicz_check")) orlicz_check(doc["orlicz_check"], "orlicz_check", c.orlicz_check);
  sync_suite(c);
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

void apply_overrides(JobConfig& config, std::optional<long long> n, std::optional<double> tol,
                     std::optional<std::uint64_t> seed) {
  if (n) {
    if (*n < 1) throw ConfigError("--N", "must be >= 1");
    config.numeric.n = static_cast<std::size_t>(*n);
    config.numeric.schedule.clear();
  }
  if (tol) {
    if (!(*tol > 0.0) || !std::isfinite(*tol)) throw ConfigError("--tol", "must be > 0");
    config.numeric.tol = *tol;
  }
  if (seed) config.seed = *seed;
  sync_suite(config);
}

}  // namespace fuzzyces::cli
