#include "fuzzyces/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzyces/error.hpp"

namespace fuzzyces {

namespace {

constexpr double kSlack = 1e-12;

double slack_for(double magnitude) { return kSlack * std::max(1.0, std::abs(magnitude)); }

}  // namespace

OrliczSpec OrliczSpec::power(double p) {
  if (!std::isfinite(p) || p < 1.0) throw InvalidInput("power Orlicz function needs a finite exponent p >= 1");
  return OrliczSpec(Variant::power, p, nullptr, nullptr);
}

OrliczSpec OrliczSpec::identity() { return OrliczSpec(Variant::identity, 1.0, nullptr, nullptr); }
OrliczSpec OrliczSpec::cube() { return OrliczSpec(Variant::cube, 3.0, nullptr, nullptr); }
OrliczSpec OrliczSpec::exp_minus_one() { return OrliczSpec(Variant::exp_minus_one, 0.0, nullptr, nullptr); }

OrliczSpec OrliczSpec::compose(OrliczSpec outer, OrliczSpec inner) {
  return OrliczSpec(Variant::compose, 0.0, std::make_shared<const OrliczSpec>(std::move(outer)),
                    std::make_shared<const OrliczSpec>(std::move(inner)));
}

OrliczSpec OrliczSpec::sum(OrliczSpec a, OrliczSpec b) {
  return OrliczSpec(Variant::sum, 0.0, std::make_shared<const OrliczSpec>(std::move(a)),
                    std::make_shared<const OrliczSpec>(std::move(b)));
}

const OrliczSpec& OrliczSpec::first() const {
  if (!first_) throw InvalidInput(describe() + " has no sub-functions");
  return *first_;
}

const OrliczSpec& OrliczSpec::second() const {
  if (!second_) throw InvalidInput(describe() + " has no sub-functions");
  return *second_;
}

double OrliczSpec::operator()(double x) const {
  if (std::isnan(x) || x < 0.0) throw InvalidInput("Orlicz functions are defined on [0, inf)");
  return eval_unchecked(x);
}

double OrliczSpec::eval_unchecked(double x) const {
  switch (variant_) {
    case Variant::power:
      if (exponent_ == 1.0) return x;
      if (exponent_ == 2.0) return x * x;
      if (exponent_ == 3.0) return x * x * x;
      return std::pow(x, exponent_);
    case Variant::identity:
      return x;
    case Variant::cube:
      return x * x * x;
    case Variant::exp_minus_one:
      return std::expm1(x);
    case Variant::compose:
      return first_->eval_unchecked(second_->eval_unchecked(x));
    case Variant::sum:
      return first_->eval_unchecked(x) + second_->eval_unchecked(x);
  }
  return 0.0;
}

std::string OrliczSpec::describe() const {
  std::ostringstream os;
  switch (variant_) {
    case Variant::power:
      os << "power(" << exponent_ << ')';
      break;
    case Variant::identity:
      os << "identity";
      break;
    case Variant::cube:
      os << "cube";
      break;
    case Variant::exp_minus_one:
      os << "exp_minus_one";
      break;
    case Variant::compose:
      os << "compose(" << first_->describe() << ", " << second_->describe() << ')';
      break;
    case Variant::sum:
      os << "sum(" << first_->describe() << ", " << second_->describe() << ')';
      break;
  }
  return os.str();
}

AxiomReport check_axioms(const OrliczSpec& m, std::span<const double> grid) {
  if (grid.size() < 3) throw InvalidInput("axiom grid needs at least 3 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0) throw InvalidInput("axiom grid must be finite and non-negative");
    if (i > 0 && grid[i] < grid[i - 1]) throw InvalidInput("axiom grid must be sorted");
  }
  if (grid.back() <= 0.0) throw InvalidInput("axiom grid must contain a positive point");

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = m(grid[i]);

  AxiomReport r;
  r.zero_at_zero = std::abs(m(0.0)) <= kSlack;

  r.monotone = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1] - slack_for(values[i - 1])) {
      r.monotone = false;
      break;
    }
  }

  r.positive = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > 0.0 && !(values[i] > 0.0)) {
      r.positive = false;
      break;
    }
  }

  r.midpoint_convex = true;
  for (std::size_t gap = 1; gap < grid.size() && r.midpoint_convex; gap *= 2) {
    for (std::size_t i = 0; i + gap < grid.size(); ++i) {
      const double avg = 0.5 * (values[i] + values[i + gap]);
      const double mid = m(0.5 * (grid[i] + grid[i + gap]));
      if (mid > avg + slack_for(avg)) {
        r.midpoint_convex = false;
        break;
      }
    }
  }

  // A convex M with M(0) = 0 satisfies M(2x) >= 2 M(x), so it must at least
  // double along a doubling probe past the grid end.
  double x = grid.back();
  double prev = m(x);
  r.divergent_trend = prev > 0.0;
  for (int j = 0; j < 10 && r.divergent_trend; ++j) {
    x *= 2.0;
    const double next = m(x);
    if (!std::isinf(next) && next < 2.0 * prev * (1.0 - kSlack)) r.divergent_trend = false;
    prev = next;
  }
  return r;
}

bool check_scaling_inequality(const OrliczSpec& m, std::span<const double> lambdas, std::span<const double> xs) {
  for (double l : lambdas) {
    if (!(l > 0.0 && l < 1.0)) throw InvalidInput("scaling factors must lie in (0, 1)");
  }
  for (double x : xs) {
    if (!std::isfinite(x) || x < 0.0) throw InvalidInput("scaling probes must be finite and non-negative");
  }
  for (double l : lambdas) {
    for (double x : xs) {
      const double rhs = l * m(x);
      if (m(l * x) > rhs + slack_for(rhs)) return false;
    }
  }
  return true;
}

Delta2Report check_delta2(const OrliczSpec& m, std::span<const double> xs, std::span<const double> factors,
                          int doublings) {
  if (xs.empty() || factors.empty()) throw InvalidInput("Delta_2 probe needs points and factors");
  if (doublings < 1) throw InvalidInput("Delta_2 probe needs at least one range doubling");
  for (double x : xs) {
    if (!std::isfinite(x) || x <= 0.0) throw InvalidInput("Delta_2 probe points must be positive");
  }
  for (double l : factors) {
    if (!std::isfinite(l) || l <= 1.0) throw InvalidInput("Delta_2 factors must exceed 1");
  }

  Delta2Report report;
  report.probe_min = *std::min_element(xs.begin(), xs.end());
  report.probe_max = *std::max_element(xs.begin(), xs.end()) * std::ldexp(1.0, doublings);

  bool all_stable = true;
  double k_max = 0.0;
  for (double l : factors) {
    Delta2Report::PerFactor pf{l, {}, std::nullopt};
    double k = 0.0;
    for (int j = 0; j <= doublings; ++j) {
      const double stretch = std::ldexp(1.0, j);
      for (double x0 : xs) {
        const double x = x0 * stretch;
        const double ratio = m(l * x) / (l * m(x));
        k = std::isfinite(ratio) ? std::max(k, ratio) : std::numeric_limits<double>::infinity();
      }
      pf.k_by_range.push_back(k);
    }
    const double last = pf.k_by_range.back();
    const double before = pf.k_by_range[pf.k_by_range.size() - 2];
    if (std::isfinite(last) && last <= 1.05 * before) {
      pf.k = last;
      k_max = std::max(k_max, last);
    } else {
      all_stable = false;
    }
    report.per_factor.push_back(std::move(pf));
  }
  if (all_stable) report.k = k_max;
  return report;
}

}  // namespace fuzzyces
