#include "fuzzyces/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzyces/difference.hpp"
#include "fuzzyces/error.hpp"

namespace fuzzyces {

namespace {

double raise(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

void check_exponent(double p) {
  if (!std::isfinite(p) || p < 1.0) throw InvalidInput("space exponent p must be finite and >= 1");
}

std::vector<double> orlicz_terms(const OrliczSpec& m, const DistSeq& a, double rho) {
  std::vector<double> b(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) b[k] = m(a[k] / rho);
  return b;
}

bool is_stable(std::span<const double> v, double threshold) {
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (!std::isfinite(v[j]) || !std::isfinite(v[j + 1])) return false;
    const double change = std::abs(v[j + 1] - v[j]);
    if (change != 0.0 && !(change < threshold * std::abs(v[j]))) return false;
  }
  return true;
}

}  // namespace

SpaceKind SpaceKind::cp(double p) {
  check_exponent(p);
  return {Family::cp, p};
}
SpaceKind SpaceKind::cinf() { return {Family::cinf, 1.0}; }
SpaceKind SpaceKind::lp(double p) {
  check_exponent(p);
  return {Family::lp, p};
}
SpaceKind SpaceKind::op(double p) {
  check_exponent(p);
  return {Family::op, p};
}
SpaceKind SpaceKind::oinf() { return {Family::oinf, 1.0}; }

SpaceKind SpaceKind::parse(std::string_view family, double p) {
  if (family == "Cp") return cp(p);
  if (family == "Cinf") return cinf();
  if (family == "Lp") return lp(p);
  if (family == "Op") return op(p);
  if (family == "Oinf") return oinf();
  throw InvalidInput("unknown space family '" + std::string(family) + "' (expected Cp, Cinf, Lp, Op or Oinf)");
}

std::string_view SpaceKind::family_name() const noexcept {
  switch (family) {
    case Family::cp: return "Cp";
    case Family::cinf: return "Cinf";
    case Family::lp: return "Lp";
    case Family::op: return "Op";
    case Family::oinf: return "Oinf";
  }
  return "?";
}

std::string SpaceKind::name() const {
  std::ostringstream os;
  os << family_name();
  if (has_exponent()) os << "(p=" << p << ')';
  return os.str();
}

DistSeq::DistSeq(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k]) || values_[k] < 0.0) {
      throw InvalidInput("distance a_" + std::to_string(k + 1) + " must be finite and non-negative");
    }
  }
}

double DistSeq::max() const noexcept {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

bool DistSeq::all_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double phi(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidInput("rho must be positive and finite");
  const auto b = orlicz_terms(m, a, rho);
  double total = 0.0;
  double prefix = 0.0;
  switch (kind.family) {
    case Family::cp:
      for (std::size_t i = 0; i < b.size(); ++i) {
        prefix += b[i];
        total += raise(prefix / static_cast<double>(i + 1), kind.p);
      }
      return total;
    case Family::cinf:
    case Family::oinf:
      for (std::size_t i = 0; i < b.size(); ++i) {
        prefix += b[i];
        total = std::max(total, prefix / static_cast<double>(i + 1));
      }
      return total;
    case Family::lp:
      for (double v : b) total += raise(v, kind.p);
      return total;
    case Family::op:
      for (std::size_t i = 0; i < b.size(); ++i) {
        prefix += b[i];
        total += raise(prefix, kind.p) / static_cast<double>(i + 1);
      }
      return total;
  }
  return total;
}

double normalized_phi(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double rho) {
  const double v = phi(kind, m, a, rho);
  return kind.has_exponent() && kind.p != 1.0 ? std::pow(v, 1.0 / kind.p) : v;
}

double luxemburg(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, const LuxemburgOptions& options) {
  if (!(options.tol > 0.0)) throw InvalidInput("luxemburg tolerance must be positive");
  if (!(options.growth > 1.0)) throw InvalidInput("bracket growth factor must exceed 1");
  if (a.all_zero()) return 0.0;

  auto feasible = [&](double rho) { return normalized_phi(kind, m, a, rho) <= 1.0; };
  auto fail = [](const char* phase, double lo, double hi) {
    std::ostringstream os;
    os << "luxemburg bisection did not converge while " << phase << "; bracket [" << lo << ", " << hi << ']';
    return NumericFailure(os.str(), lo, hi);
  };

  const double start = a.max();
  double lo = start;
  double hi = start;
  if (!feasible(hi)) {
    for (int it = 0; !feasible(hi); ++it) {
      if (it >= options.max_iterations || !std::isfinite(hi * options.growth)) throw fail("expanding", lo, hi);
      lo = hi;
      hi *= options.growth;
    }
  } else {
    for (int it = 0; feasible(lo); ++it) {
      if (it >= options.max_iterations || lo / options.growth == 0.0) throw fail("shrinking", lo, hi);
      hi = lo;
      lo /= options.growth;
    }
  }

  for (int it = 0; hi - lo > options.tol * hi; ++it) {
    if (it >= options.max_iterations) throw fail("bisecting", lo, hi);
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

double luxemburg(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double tol) {
  LuxemburgOptions options;
  options.tol = tol;
  return luxemburg(kind, m, a, options);
}

DistSeq pointwise_distances(const FuzzySeq& x, const FuzzySeq& y, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 1; k <= count; ++k) out[k - 1] = d_bar(x.at(k), y.at(k));
  return DistSeq(std::move(out));
}

DistSeq difference_distances(const FuzzySeq& x, const FuzzySeq& y, std::size_t m, std::size_t n, std::size_t count) {
  const auto dx = delta_window(x.take(count + n * m), m, n);
  const auto dy = delta_window(y.take(count + n * m), m, n);
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = d_bar(dx[k], dy[k]);
  return DistSeq(std::move(out));
}

DistSeq difference_magnitudes(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t count) {
  const auto dx = delta_window(x.take(count + n * m), m, n);
  const FuzzyReal zero = FuzzyReal::crisp(0.0);
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = d_bar(dx[k], zero);
  return DistSeq(std::move(out));
}

double eta_metric(const SpaceKind& kind, const OrliczSpec& m, const FuzzySeq& x, const FuzzySeq& y, std::size_t count,
                  double tol) {
  return luxemburg(kind, m, pointwise_distances(x, y, count), tol);
}

FMetricParts f_metric_parts(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                            const FuzzySeq& x, const FuzzySeq& y, std::size_t count, double tol) {
  FMetricParts parts;
  for (std::size_t r = 1; r <= gap * order; ++r) parts.head += d_bar(x.at(r), y.at(r));
  parts.tail = luxemburg(kind, m, difference_distances(x, y, gap, order, count), tol);
  return parts;
}

double f_metric(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order, const FuzzySeq& x,
                const FuzzySeq& y, std::size_t count, double tol) {
  return f_metric_parts(kind, m, gap, order, x, y, count, tol).total();
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::bounded: return "bounded";
    case Verdict::divergent_trend: return "divergent-trend";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify_trend(std::span<const std::size_t> schedule, std::span<const double> phi_values,
                       std::span<const double> luxemburg_values, const TrendThresholds& thresholds) {
  if (schedule.size() < 2 || phi_values.size() != schedule.size() || luxemburg_values.size() != schedule.size())
    return Verdict::inconclusive;

  if (is_stable(phi_values, thresholds.stable_relative_change) &&
      is_stable(luxemburg_values, thresholds.stable_relative_change))
    return Verdict::bounded;

  bool growing = true;
  for (std::size_t j = 0; j + 1 < schedule.size() && growing; ++j) {
    const double doublings = std::log2(static_cast<double>(schedule[j + 1]) / static_cast<double>(schedule[j]));
    const double required = std::pow(thresholds.growth_per_doubling, doublings);
    const double prev = phi_values[j];
    const double next = phi_values[j + 1];
    growing = std::isfinite(prev) && next > 0.0 && next >= required * prev;
  }
  return growing ? Verdict::divergent_trend : Verdict::inconclusive;
}

MembershipReport diagnose_distances(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& full,
                                    std::span<const std::size_t> schedule, double rho_ref,
                                    const DiagnosticOptions& options) {
  if (schedule.empty()) throw InvalidInput("membership schedule must not be empty");
  if (schedule.front() < 1) throw InvalidInput("membership schedule entries must be >= 1");
  for (std::size_t j = 1; j < schedule.size(); ++j) {
    if (schedule[j] <= schedule[j - 1]) throw InvalidInput("membership schedule must be strictly increasing");
  }
  if (schedule.back() > full.size()) throw InvalidInput("membership schedule exceeds the available distances");
  if (!(rho_ref > 0.0) || !std::isfinite(rho_ref)) throw InvalidInput("rho_ref must be positive and finite");

  MembershipReport report;
  report.kind = kind;
  report.schedule.assign(schedule.begin(), schedule.end());
  for (std::size_t n : schedule) {
    const auto prefix = full.values().first(n);
    const DistSeq a(std::vector<double>(prefix.begin(), prefix.end()));
    report.phi_values.push_back(phi(kind, m, a, rho_ref));
    try {
      report.luxemburg_values.push_back(luxemburg(kind, m, a, options.tol));
    } catch (const NumericFailure&) {
      report.luxemburg_values.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }
  report.verdict = classify_trend(report.schedule, report.phi_values, report.luxemburg_values, options.thresholds);
  return report;
}

MembershipReport membership_diagnostic(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                                       const FuzzySeq& x, std::span<const std::size_t> schedule, double rho_ref,
                                       const DiagnosticOptions& options) {
  if (schedule.empty()) throw InvalidInput("membership schedule must not be empty");
  const std::size_t longest = *std::max_element(schedule.begin(), schedule.end());
  return diagnose_distances(kind, m, difference_magnitudes(x, gap, order, longest), schedule, rho_ref, options);
}

}  // namespace fuzzyces
