#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuzzyces {

/// An Orlicz function M: [0, inf) -> [0, inf), built from a small algebra of
/// variants. Values are immutable; composite variants share their children.
class OrliczSpec {
 public:
  enum class Variant { power, identity, cube, exp_minus_one, compose, sum };

  static OrliczSpec power(double p);
  static OrliczSpec identity();
  static OrliczSpec cube();
  static OrliczSpec exp_minus_one();
  /// x -> outer(inner(x)).
  static OrliczSpec compose(OrliczSpec outer, OrliczSpec inner);
  /// x -> a(x) + b(x).
  static OrliczSpec sum(OrliczSpec a, OrliczSpec b);

  Variant variant() const noexcept { return variant_; }
  /// Exponent of a power variant.
  double exponent() const noexcept { return exponent_; }
  /// Children of compose (outer, inner) and sum (a, b).
  const OrliczSpec& first() const;
  const OrliczSpec& second() const;

  /// Throws InvalidInput for negative or NaN x. +inf maps to +inf.
  double operator()(double x) const;

  /// Compact textual form, e.g. "sum(identity, cube)".
  std::string describe() const;

 private:
  OrliczSpec(Variant v, double p, std::shared_ptr<const OrliczSpec> a, std::shared_ptr<const OrliczSpec> b)
      : variant_(v), exponent_(p), first_(std::move(a)), second_(std::move(b)) {}

  double eval_unchecked(double x) const;

  Variant variant_;
  double exponent_;
  std::shared_ptr<const OrliczSpec> first_;
  std::shared_ptr<const OrliczSpec> second_;
};

inline double evaluate(const OrliczSpec& m, double x) { return m(x); }

struct AxiomReport {
  bool zero_at_zero = false;
  bool monotone = false;
  bool midpoint_convex = false;
  bool positive = false;
  bool divergent_trend = false;

  bool all() const noexcept {
    return zero_at_zero && monotone && midpoint_convex && positive && divergent_trend;
  }
};

/// Checks the Orlicz axioms on a sorted, non-negative grid of at least three
/// points. Convexity is probed with the midpoint inequality on pairs whose
/// index gap is a power of two; divergence by ten doublings past the end of
/// the grid, where an Orlicz function must at least double each time.
AxiomReport check_axioms(const OrliczSpec& m, std::span<const double> grid);

/// M(lambda x) <= lambda M(x) for every lambda in (0, 1) and x >= 0.
bool check_scaling_inequality(const OrliczSpec& m, std::span<const double> lambdas, std::span<const double> xs);

struct Delta2Report {
  struct PerFactor {
    double factor;                   // L
    std::vector<double> k_by_range;  // empirical K after 0, 1, 2, ... range doublings
    std::optional<double> k;         // absent when K kept growing
  };
  std::vector<PerFactor> per_factor;
  std::optional<double> k;  // max over factors, absent if any factor failed
  double probe_min = 0.0;
  double probe_max = 0.0;  // largest x probed after the final doubling
};

/// Empirical Delta_2 constant: K(L) = max over the probe set of
/// M(L x) / (L M(x)). The probe range is doubled `doublings` times; K(L) is
/// reported only if the last doubling changed it by at most 5%.
Delta2Report check_delta2(const OrliczSpec& m, std::span<const double> xs, std::span<const double> factors,
                          int doublings = 3);

}  // namespace fuzzyces
