#include "fuzzyces/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fuzzyces/difference.hpp"
#include "fuzzyces/error.hpp"

namespace fuzzyces::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

FuzzyReal random_triangular(std::uint64_t seed, std::size_t k) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k))));
  std::uniform_real_distribution<double> center(-5.0, 5.0);
  std::uniform_real_distribution<double> spread(0.0, 2.0);
  const double c = center(rng);
  const double l = spread(rng);
  const double r = spread(rng);
  return FuzzyReal::triangular(c, l, r);
}

std::size_t isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string join(std::span<const std::size_t> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

double verdict_code(Verdict v) {
  switch (v) {
    case Verdict::bounded: return 0.0;
    case Verdict::divergent_trend: return 1.0;
    case Verdict::inconclusive: return 2.0;
  }
  return 2.0;
}

bool contradicts(Verdict observed, Verdict expected) {
  return observed != Verdict::inconclusive && observed != expected;
}

void record_report(ExperimentResult& out, const std::string& input, const MembershipReport& r) {
  for (std::size_t j = 0; j < r.schedule.size(); ++j) {
    const std::string n = std::to_string(r.schedule[j]);
    out.observations.push_back({input, "phi(N=" + n + ")", r.phi_values[j]});
    out.observations.push_back({input, "rho*(N=" + n + ")", r.luxemburg_values[j]});
  }
  out.observations.push_back({input, "verdict", verdict_code(r.verdict)});
  out.notes.push_back(input + ": " + std::string(to_string(r.verdict)));
}

struct PairOutcome {
  MembershipReport x;
  MembershipReport y;
};

ExperimentResult counterexample(std::string name, std::string claim, const SequencePair& pair, const SpaceKind& kind,
                                const OrliczSpec& m, std::size_t gap, std::size_t order,
                                std::span<const std::size_t> schedule, const CounterexampleOptions& options,
                                PairOutcome* outcome = nullptr) {
  ExperimentResult out;
  out.name = std::move(name);
  out.claim = std::move(claim);
  out.parameters = {{"kind", kind.name()},
                    {"orlicz", m.describe()},
                    {"m", std::to_string(gap)},
                    {"n", std::to_string(order)},
                    {"schedule", join(schedule)},
                    {"rho_ref", fmt(options.rho_ref)},
                    {"stable_relative_change", fmt(options.diagnostic.thresholds.stable_relative_change)},
                    {"growth_per_doubling", fmt(options.diagnostic.thresholds.growth_per_doubling)},
                    {"invert_expectation", options.invert_expectation ? "true" : "false"},
                    {"control", options.control ? "true" : "false"}};

  const FuzzySeq& y = options.control ? pair.x : pair.y;
  const auto rx = membership_diagnostic(kind, m, gap, order, pair.x, schedule, options.rho_ref, options.diagnostic);
  const auto ry = membership_diagnostic(kind, m, gap, order, y, schedule, options.rho_ref, options.diagnostic);
  record_report(out, "X", rx);
  record_report(out, "Y", ry);

  Verdict ex = Verdict::bounded;
  Verdict ey = Verdict::divergent_trend;
  if (options.invert_expectation) std::swap(ex, ey);

  if (rx.verdict == ex && ry.verdict == ey) {
    out.verdict = ExperimentVerdict::consistent;
  } else if (contradicts(rx.verdict, ex) && contradicts(ry.verdict, ey)) {
    out.verdict = ExperimentVerdict::inconsistent;
  } else {
    out.verdict = ExperimentVerdict::inconclusive;
  }
  if (outcome) *outcome = {rx, ry};
  return out;
}

std::vector<std::size_t> doubling_schedule(std::size_t n_base) {
  if (n_base < 1) throw InvalidInput("truncation scale N must be >= 1");
  return {n_base, 2 * n_base, 4 * n_base};
}

double lux_or_nan(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double tol) {
  try {
    return luxemburg(kind, m, a, tol);
  } catch (const NumericFailure&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

DistSeq prefix(const DistSeq& a, std::size_t n) {
  const auto v = a.values().first(n);
  return DistSeq(std::vector<double>(v.begin(), v.end()));
}

}  // namespace

SequencePair linear_and_odd_preimage() {
  FuzzySeq x([](std::size_t k) { return FuzzyReal::crisp(static_cast<double>(k)); }, std::nullopt, "linear");
  FuzzySeq y([](std::size_t k) { return FuzzyReal::crisp(k % 2 == 1 ? static_cast<double>(k) : 0.0); },
             std::nullopt, "odd-preimage");
  return {std::move(x), std::move(y)};
}

SequencePair linear_and_square_interleave() {
  FuzzySeq x([](std::size_t k) { return FuzzyReal::crisp(static_cast<double>(k)); }, std::nullopt, "linear");
  FuzzySeq y(
      [](std::size_t k) {
        if (k % 2 == 1) {
          const double j = static_cast<double>((k + 1) / 2);
          return FuzzyReal::crisp(j * j);
        }
        return FuzzyReal::crisp(static_cast<double>(nth_non_square(k / 2)));
      },
      std::nullopt, "square-interleave");
  return {std::move(x), std::move(y)};
}

SequencePair shrinking_and_widening_tents() {
  FuzzySeq x(
      [](std::size_t k) {
        const double s = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
        return FuzzyReal::triangular(0.0, s, s);
      },
      std::nullopt, "shrinking-tents");
  FuzzySeq y(
      [](std::size_t k) {
        const double s = static_cast<double>(k) * static_cast<double>(k);
        return FuzzyReal::triangular(0.0, s, s);
      },
      std::nullopt, "widening-tents");
  return {std::move(x), std::move(y)};
}

std::size_t nth_non_square(std::size_t j) {
  if (j < 1) throw InvalidInput("nth_non_square is indexed from 1");
  std::size_t r = isqrt(j);
  if (j > r * r + r) ++r;
  return j + r;
}

double shrinking_tent_gap3_distance(std::size_t k) {
  if (k < 1) throw InvalidInput("index k must be >= 1");
  const double kk = static_cast<double>(k);
  const double k3 = kk + 3.0;
  return (2.0 * kk * kk + 6.0 * kk + 9.0) / (kk * kk * k3 * k3);
}

FuzzySeq random_triangular_sequence(std::uint64_t seed, std::string label) {
  if (label.empty()) label = "random-triangular(" + std::to_string(seed) + ")";
  return FuzzySeq([seed](std::size_t k) { return random_triangular(seed, k); }, std::nullopt, std::move(label));
}

FuzzySeq random_decaying_sequence(std::uint64_t seed, std::string label) {
  if (label.empty()) label = "random-decaying(" + std::to_string(seed) + ")";
  return FuzzySeq(
      [seed](std::size_t k) {
        return scale(std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k, 1000))), random_triangular(seed, k));
      },
      std::nullopt, std::move(label));
}

std::vector<FuzzySeq> default_corpus(std::uint64_t seed) {
  std::vector<FuzzySeq> corpus;
  corpus.emplace_back([](std::size_t k) { return FuzzyReal::crisp(2.0 + 3.0 * static_cast<double>(k - 1)); },
                      std::nullopt, "crisp-arithmetic");
  corpus.emplace_back([](std::size_t k) { return FuzzyReal::crisp(std::pow(0.5, static_cast<double>(k - 1))); },
                      std::nullopt, "crisp-geometric");
  for (int s = 1; s <= 3; ++s) {
    corpus.emplace_back(
        [s](std::size_t k) {
          const double w = std::pow(static_cast<double>(k), -s);
          return FuzzyReal::triangular(1.0, w, w);
        },
        std::nullopt, "tents-k^-" + std::to_string(s));
  }
  for (auto pair : {linear_and_odd_preimage(), shrinking_and_widening_tents()}) {
    corpus.push_back(pair.x);
    corpus.push_back(pair.y);
  }
  corpus.push_back(linear_and_square_interleave().y);
  FuzzySeq zero = FuzzySeq::zero();
  corpus.emplace_back([zero](std::size_t k) { return zero.at(k); }, std::nullopt, "zero");
  corpus.push_back(random_decaying_sequence(seed));
  corpus.push_back(random_decaying_sequence(splitmix64(seed)));
  return corpus;
}

std::string_view to_string(ExperimentVerdict v) noexcept {
  switch (v) {
    case ExperimentVerdict::consistent: return "consistent-with-paper";
    case ExperimentVerdict::inconsistent: return "inconsistent";
    case ExperimentVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ExperimentResult run_solidity_check(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                                    std::span<const std::size_t> schedule, const CounterexampleOptions& options) {
  const auto pair = linear_and_odd_preimage();
  auto out = counterexample("solidity",
                            "The difference Cesaro spaces are not solid: a bounded sequence has a pointwise smaller "
                            "sequence that is not bounded.",
                            pair, kind, m, gap, order, schedule, options);

  // The modulus premise |Y_k| <= |X_k| over every index the diagnostic touches.
  const std::size_t last = *std::max_element(schedule.begin(), schedule.end()) + gap * order;
  const FuzzySeq& y = options.control ? pair.x : pair.y;
  std::size_t violations = 0;
  for (std::size_t k = 1; k <= last; ++k) {
    if (!fuzzy_leq(abs_value(y.at(k)), abs_value(pair.x.at(k)))) ++violations;
  }
  out.observations.push_back({"Y", "modulus-premise-violations", static_cast<double>(violations)});
  if (violations > 0) {
    out.notes.push_back("pointwise modulus premise fails at " + std::to_string(violations) + " indices");
    out.verdict = ExperimentVerdict::inconsistent;
  }
  return out;
}

ExperimentResult run_symmetry_check(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                                    std::span<const std::size_t> schedule, const CounterexampleOptions& options) {
  const auto pair = linear_and_square_interleave();
  PairOutcome outcome;
  auto out = counterexample("symmetry",
                            "The difference Cesaro spaces are not symmetric: a rearrangement of a bounded sequence is "
                            "not bounded.",
                            pair, kind, m, gap, order, schedule, options, &outcome);
  out.notes.push_back("X_k = crisp(k) is used for the member sequence so that Y is a genuine rearrangement of X");

  // Growth exponent of d(Delta Y_k, 0) on odd k between N/2 and N.
  const std::size_t n_max = *std::max_element(schedule.begin(), schedule.end());
  const FuzzySeq& y = options.control ? pair.x : pair.y;
  const auto a = difference_magnitudes(y, gap, order, n_max);
  std::size_t k2 = n_max % 2 == 1 ? n_max : n_max - 1;
  std::size_t k1 = (k2 / 2) % 2 == 1 ? k2 / 2 : k2 / 2 + 1;
  if (k1 >= 1 && k2 > k1 && a[k1 - 1] > 0.0 && a[k2 - 1] > 0.0) {
    const double slope = std::log(a[k2 - 1] / a[k1 - 1]) / std::log(static_cast<double>(k2) / static_cast<double>(k1));
    out.observations.push_back({"Y", "odd-index-growth-exponent", slope});
  }
  return out;
}

ExperimentResult run_convergence_free_check(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap,
                                            std::size_t order, std::span<const std::size_t> schedule,
                                            const CounterexampleOptions& options) {
  const auto pair = shrinking_and_widening_tents();
  auto out = counterexample("convergence-free",
                            "The difference Cesaro spaces are not convergence-free: changing nonzero values of a "
                            "bounded sequence while keeping its zero set yields an unbounded sequence.",
                            pair, kind, m, gap, order, schedule, options);

  const std::size_t last = *std::max_element(schedule.begin(), schedule.end()) + gap * order;
  const FuzzySeq& y = options.control ? pair.x : pair.y;
  const FuzzyReal zero;
  std::size_t mismatched = 0;
  for (std::size_t k = 1; k <= last; ++k) {
    if ((pair.x.at(k) == zero) != (y.at(k) == zero)) ++mismatched;
  }
  out.observations.push_back({"Y", "zero-set-mismatches", static_cast<double>(mismatched)});
  if (mismatched > 0) {
    out.notes.push_back("zero sets of X and Y differ at " + std::to_string(mismatched) + " indices");
    out.verdict = ExperimentVerdict::inconsistent;
  }

  if (gap == 3 && order == 1) {
    const auto a = difference_magnitudes(pair.x, gap, order, last - gap * order);
    double err = 0.0;
    for (std::size_t k = 1; k <= a.size(); ++k) err = std::max(err, std::abs(a[k - 1] - shrinking_tent_gap3_distance(k)));
    out.observations.push_back({"X", "closed-form-max-error", err});
  }
  return out;
}

ExperimentResult run_inclusion_matrix(const OrliczSpec& m, std::size_t gap, std::size_t order, double p, double q,
                                      const std::vector<FuzzySeq>& corpus, std::size_t n_base,
                                      const InclusionOptions& options) {
  if (!(q > p)) throw InvalidInput("inclusion matrix needs q > p");
  const auto schedule = doubling_schedule(n_base);
  const std::size_t n_max = schedule.back();
  const std::vector<SpaceKind> kinds{SpaceKind::cp(p), SpaceKind::cinf(),  SpaceKind::lp(p), SpaceKind::op(p),
                                     SpaceKind::oinf(), SpaceKind::cp(q), SpaceKind::lp(q)};
  enum { kCp, kCinf, kLp, kOp, kOinf, kCq, kLq };

  ExperimentResult out;
  out.name = "inclusion-matrix";
  out.claim =
      "Lp is contained in Op and Op in Cp; each difference order is contained in the next; Cp is contained in Cq for "
      "p < q; the undifferenced space is contained in the differenced one.";
  out.parameters = {{"orlicz", m.describe()}, {"m", std::to_string(gap)},         {"n", std::to_string(order)},
                    {"p", fmt(p)},            {"q", fmt(q)},                      {"schedule", join(schedule)},
                    {"rho_ref", fmt(options.rho_ref)}, {"corpus_size", std::to_string(corpus.size())}};

  std::size_t violations = 0;
  std::size_t definite = 0;
  auto violate = [&](const std::string& what) {
    ++violations;
    out.notes.push_back("violation: " + what);
  };

  for (const auto& seq : corpus) {
    const std::string label = seq.label();
    std::vector<DistSeq> dist;
    std::vector<std::vector<MembershipReport>> reports(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
      dist.push_back(difference_magnitudes(seq, gap, j, n_max + gap));
      for (const auto& kind : kinds) {
        reports[j].push_back(diagnose_distances(kind, m, dist[j], schedule, options.rho_ref, options.diagnostic));
        const auto& r = reports[j].back();
        if (r.verdict != Verdict::inconclusive) ++definite;
        const std::string tag = "n=" + std::to_string(j) + " " + kind.name();
        out.observations.push_back({label, tag + " verdict", verdict_code(r.verdict)});
        out.observations.push_back({label, tag + " rho*(N=" + std::to_string(n_max) + ")", r.luxemburg_values.back()});
      }
    }

    for (std::size_t j = 0; j <= order; ++j) {
      const auto& rj = reports[j];
      const std::string at = label + " n=" + std::to_string(j);
      for (std::size_t t = 0; t < schedule.size(); ++t) {
        const double c = rj[kCp].luxemburg_values[t];
        const double o = rj[kOp].luxemburg_values[t];
        if (std::isfinite(c) && std::isfinite(o) && c > o + 1e-9 * std::max(1.0, o))
          violate(at + ": rho*(Cp) > rho*(Op) at N=" + std::to_string(schedule[t]));
      }
      if (rj[kCp].verdict == Verdict::bounded && rj[kCq].verdict == Verdict::divergent_trend)
        violate(at + ": bounded in Cp but divergent in Cq");
      if (rj[kLp].verdict == Verdict::bounded && rj[kLq].verdict == Verdict::divergent_trend)
        violate(at + ": bounded in Lp but divergent in Lq");
      if (rj[kLp].verdict == Verdict::bounded && rj[kOp].verdict == Verdict::divergent_trend)
        violate(at + ": bounded in Lp but divergent in Op");
      if (rj[kOp].verdict == Verdict::bounded && rj[kCp].verdict == Verdict::divergent_trend)
        violate(at + ": bounded in Op but divergent in Cp");

      if (j + 1 <= order) {
        for (std::size_t i = 0; i < kinds.size(); ++i) {
          if (rj[i].verdict == Verdict::bounded && reports[j + 1][i].verdict == Verdict::divergent_trend)
            violate(at + " " + kinds[i].name() + ": bounded but divergent at the next order");
        }
        const auto& lo = dist[j];
        const auto& hi = dist[j + 1];
        for (std::size_t k = 0; k < n_max; ++k) {
          const double rhs = lo[k] + lo[k + gap];
          if (hi[k] > rhs + 1e-12 * std::max(1.0, rhs)) {
            violate(at + ": pointwise triangle bound fails at k=" + std::to_string(k + 1));
            break;
          }
        }
        for (std::size_t n : schedule) {
          const double upper = lux_or_nan(kinds[kLp], m, prefix(dist[j + 1], n), options.diagnostic.tol);
          const double lower = lux_or_nan(kinds[kLp], m, prefix(dist[j], n + gap), options.diagnostic.tol);
          if (std::isfinite(upper) && std::isfinite(lower) && upper > 2.0 * lower * (1.0 + 1e-9))
            violate(at + ": Lp norm more than doubles at the next order, N=" + std::to_string(n));
        }
      }
    }
    if (order >= 1 && reports[0][kCp].verdict == Verdict::bounded &&
        reports[order][kCp].verdict == Verdict::divergent_trend)
      violate(label + ": bounded undifferenced but divergent at order " + std::to_string(order));
    if (!dist[0].all_zero() && reports[0][kOp].verdict != Verdict::bounded && reports[0][kLp].verdict == Verdict::bounded)
      out.notes.push_back(label + ": Op keeps a harmonic tail while Lp is bounded");
  }

  out.observations.push_back({"corpus", "violations", static_cast<double>(violations)});
  out.observations.push_back({"corpus", "definite-verdicts", static_cast<double>(definite)});
  if (violations > 0)
    out.verdict = ExperimentVerdict::inconsistent;
  else if (definite > 0)
    out.verdict = ExperimentVerdict::consistent;
  else
    out.verdict = ExperimentVerdict::inconclusive;
  return out;
}

ExperimentResult run_orlicz_closure(const OrliczSpec& outer, const OrliczSpec& m1, const OrliczSpec& m2,
                                    std::size_t gap, std::size_t order, const SpaceKind& kind,
                                    const std::vector<FuzzySeq>& corpus, std::size_t n_base,
                                    const InclusionOptions& options) {
  const auto schedule = doubling_schedule(n_base);
  const auto composed = OrliczSpec::compose(outer, m1);
  const auto summed = OrliczSpec::sum(m1, m2);

  ExperimentResult out;
  out.name = "orlicz-closure";
  out.claim =
      "For Delta_2 Orlicz functions, membership under M1 implies membership under M o M1, and membership under M1 and "
      "M2 implies membership under M1 + M2.";
  out.parameters = {{"outer", outer.describe()},       {"m1", m1.describe()},
                    {"m2", m2.describe()},             {"kind", kind.name()},
                    {"m", std::to_string(gap)},        {"n", std::to_string(order)},
                    {"schedule", join(schedule)},      {"rho_ref", fmt(options.rho_ref)}};

  double sum_error = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = 0.1 * i;
    sum_error = std::max(sum_error, std::abs(summed(x) - (m1(x) + m2(x))));
  }
  out.observations.push_back({"sum", "identity-max-error", sum_error});

  const std::vector<double> xs{0.5, 1.0, 2.0, 4.0, 8.0};
  const std::vector<double> factors{2.0};
  for (const auto* f : {&outer, &m1, &m2}) {
    const auto d2 = check_delta2(*f, xs, factors);
    out.observations.push_back(
        {f->describe(), "delta2-K", d2.k ? *d2.k : std::numeric_limits<double>::quiet_NaN()});
    if (!d2.k) out.notes.push_back(f->describe() + " shows no Delta_2 constant on the probe range");
  }

  std::size_t violations = 0;
  std::size_t definite = 0;
  for (const auto& seq : corpus) {
    const auto a = difference_magnitudes(seq, gap, order, schedule.back());
    const auto r1 = diagnose_distances(kind, m1, a, schedule, options.rho_ref, options.diagnostic);
    const auto r2 = diagnose_distances(kind, m2, a, schedule, options.rho_ref, options.diagnostic);
    const auto rc = diagnose_distances(kind, composed, a, schedule, options.rho_ref, options.diagnostic);
    const auto rs = diagnose_distances(kind, summed, a, schedule, options.rho_ref, options.diagnostic);
    for (const auto* r : {&r1, &r2, &rc, &rs}) {
      if (r->verdict != Verdict::inconclusive) ++definite;
    }
    out.observations.push_back({seq.label(), "m1 verdict", verdict_code(r1.verdict)});
    out.observations.push_back({seq.label(), "m2 verdict", verdict_code(r2.verdict)});
    out.observations.push_back({seq.label(), "compose verdict", verdict_code(rc.verdict)});
    out.observations.push_back({seq.label(), "sum verdict", verdict_code(rs.verdict)});
    if (r1.verdict == Verdict::bounded && rc.verdict == Verdict::divergent_trend) {
      ++violations;
      out.notes.push_back("violation: " + seq.label() + " bounded under m1 but divergent under the composition");
    }
    if (r1.verdict == Verdict::bounded && r2.verdict == Verdict::bounded && rs.verdict == Verdict::divergent_trend) {
      ++violations;
      out.notes.push_back("violation: " + seq.label() + " bounded under m1 and m2 but divergent under the sum");
    }
  }
  out.observations.push_back({"corpus", "violations", static_cast<double>(violations)});

  if (violations > 0 || sum_error > 0.0)
    out.verdict = ExperimentVerdict::inconsistent;
  else if (definite > 0)
    out.verdict = ExperimentVerdict::consistent;
  else
    out.verdict = ExperimentVerdict::inconclusive;
  return out;
}

ExperimentResult run_metric_axioms(const std::vector<SpaceKind>& kinds, const OrliczSpec& m, std::size_t gap,
                                   std::size_t order, std::uint64_t seed, const MetricAxiomOptions& options) {
  ExperimentResult out;
  out.name = "metric-axioms";
  out.claim = "Each f-metric is symmetric, vanishes on the diagonal and satisfies the triangle inequality.";
  out.parameters = {{"orlicz", m.describe()},
                    {"m", std::to_string(gap)},
                    {"n", std::to_string(order)},
                    {"seed", std::to_string(seed)},
                    {"triples", std::to_string(options.triples)},
                    {"N", std::to_string(options.count)},
                    {"tol", fmt(options.tol)},
                    {"triangle_slack", fmt(options.triangle_slack)}};

  bool ok = true;
  for (const auto& kind : kinds) {
    std::size_t asymmetric = 0;
    std::size_t nonzero_diagonal = 0;
    std::size_t triangle_failures = 0;
    double worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < options.triples; ++t) {
      const std::uint64_t base = splitmix64(seed + 3 * t);
      const auto x = random_triangular_sequence(base);
      const auto y = random_triangular_sequence(base + 1);
      const auto z = random_triangular_sequence(base + 2);
      auto f = [&](const FuzzySeq& a, const FuzzySeq& b) {
        return f_metric(kind, m, gap, order, a, b, options.count, options.tol);
      };
      const double xy = f(x, y);
      const double yx = f(y, x);
      const double xz = f(x, z);
      const double zy = f(z, y);
      if (xy != yx) ++asymmetric;
      if (f(x, x) != 0.0) ++nonzero_diagonal;
      const double excess = xy - (xz + zy);
      worst_excess = std::max(worst_excess, excess);
      if (excess > options.triangle_slack) ++triangle_failures;
    }
    const std::string k = kind.name();
    out.observations.push_back({k, "asymmetric-pairs", static_cast<double>(asymmetric)});
    out.observations.push_back({k, "nonzero-diagonal", static_cast<double>(nonzero_diagonal)});
    out.observations.push_back({k, "triangle-failures", static_cast<double>(triangle_failures)});
    out.observations.push_back({k, "worst-triangle-excess", worst_excess});
    ok = ok && asymmetric == 0 && nonzero_diagonal == 0 && triangle_failures == 0;
  }
  out.verdict = ok ? ExperimentVerdict::consistent : ExperimentVerdict::inconsistent;
  return out;
}

ExperimentResult run_closed_forms(std::size_t k_max) {
  if (k_max < 1) throw InvalidInput("closed-form range needs k_max >= 1");
  ExperimentResult out;
  out.name = "closed-forms";
  out.claim =
      "Gap-3 differences of the shrinking tents have d_bar(Delta X_k, 0) = (2k^2 + 6k + 9) / (k^2 (k + 3)^2); second "
      "gap-3 differences of crisp(k) vanish; gap-3 differences of the widening tents have d_bar = 2k^2 + 6k + 9.";
  out.parameters = {{"k_max", std::to_string(k_max)}};

  const auto tents = shrinking_and_widening_tents();
  const auto shrink = difference_magnitudes(tents.x, 3, 1, k_max);
  const auto widen = difference_magnitudes(tents.y, 3, 1, k_max);
  const auto linear = difference_magnitudes(linear_and_odd_preimage().x, 3, 2, k_max);

  double shrink_err = 0.0;
  double widen_rel = 0.0;
  std::size_t nonzero = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    shrink_err = std::max(shrink_err, std::abs(shrink[k - 1] - shrinking_tent_gap3_distance(k)));
    const double kk = static_cast<double>(k);
    const double w = 2.0 * kk * kk + 6.0 * kk + 9.0;
    widen_rel = std::max(widen_rel, std::abs(widen[k - 1] - w) / w);
    if (linear[k - 1] != 0.0) ++nonzero;
  }
  out.observations.push_back({"shrinking-tents", "max-abs-error", shrink_err});
  out.observations.push_back({"widening-tents", "max-rel-error", widen_rel});
  out.observations.push_back({"linear", "nonzero-second-differences", static_cast<double>(nonzero)});
  out.verdict = shrink_err <= 1e-9 && widen_rel <= 1e-12 && nonzero == 0 ? ExperimentVerdict::consistent
                                                                          : ExperimentVerdict::inconsistent;
  return out;
}

std::vector<ExperimentResult> run_suite(const SuiteConfig& config) {
  auto options_for = [&](const CounterexampleConfig& c) {
    CounterexampleOptions o;
    o.rho_ref = config.rho_ref;
    o.diagnostic = config.diagnostic;
    o.invert_expectation = c.invert_expectation;
    return o;
  };
  InclusionOptions inclusion_options{config.rho_ref, config.diagnostic};
  const auto corpus = default_corpus(config.seed);

  std::vector<ExperimentResult> results;
  const auto& s = config.solidity;
  results.push_back(run_solidity_check(s.kind, s.orlicz, s.gap, s.order, s.schedule, options_for(s)));
  const auto& y = config.symmetry;
  results.push_back(run_symmetry_check(y.kind, y.orlicz, y.gap, y.order, y.schedule, options_for(y)));
  const auto& c = config.convergence_free;
  results.push_back(run_convergence_free_check(c.kind, c.orlicz, c.gap, c.order, c.schedule, options_for(c)));
  const auto& i = config.inclusion;
  results.push_back(run_inclusion_matrix(i.orlicz, i.gap, i.order, i.p, i.q, corpus, i.n_base, inclusion_options));
  const auto& cl = config.closure;
  results.push_back(
      run_orlicz_closure(cl.outer, cl.m1, cl.m2, cl.gap, cl.order, cl.kind, corpus, cl.n_base, inclusion_options));
  const auto& ma = config.metric_axioms;
  const std::vector<SpaceKind> kinds{SpaceKind::cp(2.0), SpaceKind::cinf(), SpaceKind::lp(2.0), SpaceKind::op(2.0),
                                     SpaceKind::oinf()};
  results.push_back(run_metric_axioms(kinds, ma.orlicz, ma.gap, ma.order, config.seed, ma.options));
  results.push_back(run_closed_forms(config.closed_form_k_max));
  return results;
}

}  // namespace fuzzyces::harness
