// Acceptance gate. Prints one PASS/FAIL line per criterion. With an argument
// only that criterion runs. Exit status is non-zero if any selected criterion
// fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "fuzzyces/difference.hpp"
#include "fuzzyces/functionals.hpp"
#include "fuzzyces/fuzzy_real.hpp"
#include "fuzzyces/harness.hpp"
#include "fuzzyces/orlicz.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fuzzyces;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// 1. d_bar(Delta_3 X_k, 0) for the shrinking tents equals (2k^2+6k+9)/(k^2(k+3)^2).
Outcome closed_form_tents() {
  constexpr double kTol = 1e-9;
  const auto x = harness::shrinking_and_widening_tents().x;
  const FuzzyReal zero;
  double worst = 0;
  for (std::size_t k = 1; k <= 200; ++k) {
    const double kk = static_cast<double>(k);
    const double want = (2 * kk * kk + 6 * kk + 9) / (kk * kk * (kk + 3) * (kk + 3));
    worst = std::max(worst, std::abs(d_bar(delta_binomial(x, 3, 1, k), zero) - want));
  }
  return {worst <= kTol, "max abs error " + num(worst) + " over k = 1..200 (tol 1e-9)"};
}

// 2. d_bar(Delta_3^2 crisp(k), 0) = 0 exactly.
Outcome vanishing_difference() {
  const auto x = harness::linear_and_odd_preimage().x;
  const FuzzyReal zero;
  std::size_t nonzero = 0;
  for (std::size_t k = 1; k <= 200; ++k) {
    if (d_bar(delta_binomial(x, 3, 2, k), zero) != 0.0) ++nonzero;
  }
  return {nonzero == 0, std::to_string(nonzero) + " nonzero values over k = 1..200 (exact)"};
}

// 3. verify-paper: the three counterexamples are consistent.
Outcome counterexample_suite() {
  const auto result = cli::cmd_verify_paper(cli::default_config());
  const auto& experiments = result.body.at("experiments");
  bool pass = true;
  std::string detail;
  for (const char* name : {"solidity", "symmetry", "convergence-free"}) {
    for (const auto& e : experiments) {
      if (e.at("name") != name) continue;
      const std::string verdict = e.at("verdict");
      pass = pass && verdict == "consistent-with-paper";
      detail += std::string(detail.empty() ? "" : ", ") + name + "=" + verdict;
      if (std::string(name) == "symmetry") {
        for (const auto& o : e.at("observations")) {
          if (o.at("quantity") == "odd-index-growth-exponent")
            detail += " (Y difference growth exponent " + num(o.at("value").get<double>()) + ")";
        }
      }
    }
  }
  return {pass, detail};
}

// 4. Identity M with lp: rho* = (sum a^p)^(1/p).
Outcome luxemburg_closed_form() {
  constexpr double kRel = 1e-8;
  testgen::Gen g(4004);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double p = g.uniform(1, 4);
    const auto a = g.distances(static_cast<std::size_t>(g.integer(1, 50)));
    double s = 0;
    for (double v : a) s += std::pow(v, p);
    const double want = std::pow(s, 1 / p);
    worst = std::max(worst, rel(luxemburg(SpaceKind::lp(p), OrliczSpec::identity(), DistSeq(a), 1e-12), want));
  }
  return {worst <= kRel, "max relative error " + num(worst) + " on 100 inputs (tol 1e-8)"};
}

// 5. phi is non-increasing in rho; rho* brackets the level 1.
Outcome monotone_fixed_point() {
  constexpr double kLuxTol = 1e-10;
  testgen::Gen g(5005);
  const std::vector<OrliczSpec> ms{OrliczSpec::identity(), OrliczSpec::cube(), OrliczSpec::power(1.5),
                                   OrliczSpec::exp_minus_one(),
                                   OrliczSpec::sum(OrliczSpec::identity(), OrliczSpec::power(2))};
  std::size_t monotone_failures = 0, bracket_failures = 0, brackets = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto kind = g.kind();
    const auto& m = ms[static_cast<std::size_t>(g.integer(0, static_cast<int>(ms.size()) - 1))];
    const DistSeq a(g.distances(static_cast<std::size_t>(g.integer(1, 20)), 4.0));
    const double r1 = g.log_uniform(1e-2, 1e2);
    const double r2 = r1 * g.log_uniform(1.0 + 1e-9, 1e2);
    if (phi(kind, m, a, r2) > phi(kind, m, a, r1)) ++monotone_failures;
    if (i % 10 == 0) {
      ++brackets;
      const double rho = luxemburg(kind, m, a, kLuxTol);
      if (!(rho > 0) || normalized_phi(kind, m, a, rho) > 1.0 ||
          !(normalized_phi(kind, m, a, rho * (1 - kLuxTol)) > 1.0))
        ++bracket_failures;
    }
  }
  return {monotone_failures == 0 && bracket_failures == 0,
          std::to_string(monotone_failures) + " monotonicity failures in 10000 probes, " +
              std::to_string(bracket_failures) + " bracket failures in " + std::to_string(brackets)};
}

// 6. luxemburg(c a) = c luxemburg(a).
Outcome homogeneity() {
  constexpr double kRel = 1e-8;
  testgen::Gen g(6006);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const auto kind = g.kind();
    const auto m = g.coin() ? OrliczSpec::identity() : OrliczSpec::cube();
    const auto a = g.distances(20);
    const double c = g.log_uniform(1e-3, 1e3);
    std::vector<double> ca(a);
    for (auto& v : ca) v *= c;
    const double base = luxemburg(kind, m, DistSeq(a), 1e-12);
    worst = std::max(worst, rel(luxemburg(kind, m, DistSeq(ca), 1e-12), c * base));
  }
  return {worst <= kRel, "max relative error " + num(worst) + " on 500 probes (tol 1e-8)"};
}

// 7. Binomial and iterative difference forms agree.
Outcome binomial_iterative() {
  constexpr double kTol = 1e-12;
  testgen::Gen g(7007);
  double worst = 0;
  for (int s = 0; s < 200; ++s) {
    const auto x = g.sequence(40);
    const auto values = x.take(40);
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t k = 1; k <= 20; ++k)
          worst = std::max(worst, d_bar(delta_binomial(values, m, n, k), delta_iterative(x, m, n, k)));
      }
    }
  }
  return {worst <= kTol, "max d_bar " + num(worst) + " over 200 sequences, m <= 4, n <= 3, k <= 20 (tol 1e-12)"};
}

// 8. f-metric axioms for each kind.
Outcome metric_axioms() {
  harness::MetricAxiomOptions o;
  o.triples = 1000;
  o.count = 20;
  o.tol = 1e-12;
  o.triangle_slack = 1e-9;
  const auto r = harness::run_metric_axioms(testgen::five_kinds(2), OrliczSpec::identity(), 2, 1, 8008, o);
  double failures = 0, worst = -INFINITY;
  for (const auto& obs : r.observations) {
    if (obs.quantity == "worst-triangle-excess")
      worst = std::max(worst, obs.value);
    else
      failures += obs.value;
  }
  return {r.verdict == harness::ExperimentVerdict::consistent,
          num(failures) + " axiom failures over 1000 triples x 5 kinds, worst triangle excess " + num(worst) +
              " (slack 1e-9)"};
}

// 9. rho*(Cp) <= rho*(Op) + 1e-10.
Outcome cp_below_op() {
  constexpr double kSlack = 1e-10;
  testgen::Gen g(9009);
  std::size_t failures = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 100; ++i) {
    const double p = static_cast<double>(1 + i % 3);
    const DistSeq a(g.distances(static_cast<std::size_t>(g.integer(1, 60))));
    const double c = luxemburg(SpaceKind::cp(p), OrliczSpec::identity(), a, 1e-13);
    const double o = luxemburg(SpaceKind::op(p), OrliczSpec::identity(), a, 1e-13);
    worst = std::max(worst, c - o);
    if (c > o + kSlack) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " violations on 100 inputs, max (Cp - Op) " + num(worst)};
}

// 10. Scaling inequality for built-ins, Delta_2 for powers and exp_minus_one.
Outcome orlicz_properties() {
  std::vector<double> lambdas, xs;
  for (int i = 1; i < 20; ++i) lambdas.push_back(i / 20.0);
  for (int i = 0; i <= 100; ++i) xs.push_back(0.2 * i);
  const std::vector<OrliczSpec> built_ins{OrliczSpec::identity(), OrliczSpec::cube(), OrliczSpec::power(1.5),
                                          OrliczSpec::power(2), OrliczSpec::power(3.5), OrliczSpec::exp_minus_one(),
                                          OrliczSpec::compose(OrliczSpec::cube(), OrliczSpec::identity()),
                                          OrliczSpec::sum(OrliczSpec::identity(), OrliczSpec::cube())};
  bool scaling = true;
  for (const auto& m : built_ins) scaling = scaling && check_scaling_inequality(m, lambdas, xs);

  const std::vector<double> probes{0.5, 1, 2, 4, 8};
  const std::vector<double> two{2.0};
  double worst = 0;
  bool powers = true;
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
    const auto r = check_delta2(OrliczSpec::power(p), probes, two);
    if (!r.k) {
      powers = false;
      continue;
    }
    worst = std::max(worst, rel(*r.k, std::pow(2.0, p - 1)));
  }
  powers = powers && worst <= 0.05;
  const bool exp_fails = !check_delta2(OrliczSpec::exp_minus_one(), probes, two).k.has_value();
  return {scaling && powers && exp_fails, std::string("scaling inequality ") + (scaling ? "holds" : "fails") +
                                              ", power K max relative error " + num(worst) + " (tol 5%), exp_minus_one " +
                                              (exp_fails ? "reports no constant" : "reports a constant")};
}

// 11. d_bar from breakpoints equals a 1001-point dense grid.
Outcome d_bar_dense() {
  constexpr double kTol = 1e-12;
  testgen::Gen g(1111);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = g.on_grid(1000);
    const auto y = g.on_grid(1000);
    worst = std::max(worst, std::abs(d_bar(x, y) - oracle::dense_d_bar(x, y, 1001)));
  }
  return {worst <= kTol, "max abs difference " + num(worst) + " over 1000 pairs (tol 1e-12)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"shrinking-tent difference closed form", closed_form_tents},
      {"second differences of crisp(k) vanish", vanishing_difference},
      {"counterexample suite consistent", counterexample_suite},
      {"Luxemburg closed form for identity lp", luxemburg_closed_form},
      {"phi monotone in rho, rho* brackets 1", monotone_fixed_point},
      {"Luxemburg homogeneity", homogeneity},
      {"binomial and iterative differences agree", binomial_iterative},
      {"f-metric axioms", metric_axioms},
      {"Cp below Op", cp_below_op},
      {"Orlicz scaling and Delta_2", orlicz_properties},
      {"d_bar matches dense grid", d_bar_dense},
  };

  std::size_t only = 0;
  if (argc > 1) {
    only = static_cast<std::size_t>(std::strtoul(argv[1], nullptr, 10));
    if (only < 1 || only > criteria.size()) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
      return 2;
    }
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    const auto out = criteria[i].second();
    std::printf("%s %2zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, out.detail.c_str());
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
