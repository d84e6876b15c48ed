#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyces/orlicz.hpp"
#include "fuzzyces/sequence.hpp"

namespace fuzzyces {

/// The five Cesaro/Orlicz aggregates. With b_k = M(a_k / rho) and
/// S_i = b_1 + ... + b_i, truncated at N:
///   cp   : sum_i (S_i / i)^p
///   cinf : max_i S_i / i
///   lp   : sum_k b_k^p
///   op   : sum_i (1 / i) S_i^p
///   oinf : max_i S_i / i   (same aggregate as cinf)
enum class Family { cp, cinf, lp, op, oinf };

struct SpaceKind {
  Family family = Family::cp;
  double p = 1.0;  // meaningful for cp, lp, op

  static SpaceKind cp(double p);
  static SpaceKind cinf();
  static SpaceKind lp(double p);
  static SpaceKind op(double p);
  static SpaceKind oinf();
  /// Family from its short name ("Cp", "Cinf", "Lp", "Op", "Oinf").
  static SpaceKind parse(std::string_view family, double p = 1.0);

  bool has_exponent() const noexcept { return family == Family::cp || family == Family::lp || family == Family::op; }
  /// "Cp(p=2)", "Cinf", ...
  std::string name() const;
  std::string_view family_name() const noexcept;

  friend bool operator==(const SpaceKind&, const SpaceKind&) = default;
};

/// Truncated distance sequence a_1..a_N; entries finite and non-negative.
class DistSeq {
 public:
  DistSeq() = default;
  explicit DistSeq(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double max() const noexcept;
  bool all_zero() const noexcept;

 private:
  std::vector<double> values_;
};

/// Truncated aggregate at a fixed rho > 0.
double phi(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double rho);

/// phi with the outer 1/p root applied for cp, lp and op; this is the
/// quantity compared against 1 by the Luxemburg functional.
double normalized_phi(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double rho);

struct LuxemburgOptions {
  double tol = 1e-10;       // relative bracket width at termination
  int max_iterations = 200;  // per phase: doubling, halving, bisection
  double growth = 2.0;       // bracket expansion factor
};

/// inf{rho > 0 : normalized_phi(rho) <= 1}. Returns 0 when a is all zero.
/// The returned value is the feasible end of the final bracket. Throws
/// NumericFailure carrying the bracket if a phase exceeds its iteration cap.
double luxemburg(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, const LuxemburgOptions& options = {});
double luxemburg(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& a, double tol);

/// a_k = d_bar(X_k, Y_k), k = 1..N.
DistSeq pointwise_distances(const FuzzySeq& x, const FuzzySeq& y, std::size_t count);

/// a_k = d_bar(Delta X_k, Delta Y_k), k = 1..N. Each sequence is evaluated
/// once over 1..N + n m.
DistSeq difference_distances(const FuzzySeq& x, const FuzzySeq& y, std::size_t m, std::size_t n, std::size_t count);

/// a_k = d_bar(Delta X_k, 0).
DistSeq difference_magnitudes(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t count);

/// Luxemburg functional of pointwise distances on 1..N.
double eta_metric(const SpaceKind& kind, const OrliczSpec& m, const FuzzySeq& x, const FuzzySeq& y, std::size_t count,
                  double tol = 1e-10);

struct FMetricParts {
  double head = 0.0;  // sum_{r=1}^{m n} d_bar(X_r, Y_r)
  double tail = 0.0;  // Luxemburg functional of the differenced distances
  double total() const noexcept { return head + tail; }
};

FMetricParts f_metric_parts(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                            const FuzzySeq& x, const FuzzySeq& y, std::size_t count, double tol = 1e-10);

double f_metric(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order, const FuzzySeq& x,
                const FuzzySeq& y, std::size_t count, double tol = 1e-10);

enum class Verdict { bounded, divergent_trend, inconclusive };
std::string_view to_string(Verdict v) noexcept;

/// Finite-scale surrogates for "bounded" and "divergent".
struct TrendThresholds {
  double stable_relative_change = 0.10;  // bounded: every successive change below this
  double growth_per_doubling = 2.0;      // divergent: phi grows at least this much per doubling of N
};

struct DiagnosticOptions {
  double tol = 1e-10;
  TrendThresholds thresholds{};
};

struct MembershipReport {
  SpaceKind kind;
  std::vector<std::size_t> schedule;
  std::vector<double> phi_values;         // phi at rho_ref, one per N
  std::vector<double> luxemburg_values;   // rho*, NaN where bisection failed
  Verdict verdict = Verdict::inconclusive;
};

/// Tabulates phi(rho_ref) and rho* for each truncation in the strictly
/// increasing schedule, then classifies the trend. Numeric failures make the
/// verdict inconclusive instead of propagating.
MembershipReport membership_diagnostic(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                                       const FuzzySeq& x, std::span<const std::size_t> schedule, double rho_ref,
                                       const DiagnosticOptions& options = {});

/// Same diagnostic over precomputed distances a_1..a_M with M >= the last
/// schedule entry.
MembershipReport diagnose_distances(const SpaceKind& kind, const OrliczSpec& m, const DistSeq& full,
                                    std::span<const std::size_t> schedule, double rho_ref,
                                    const DiagnosticOptions& options = {});

/// Trend classification used by membership_diagnostic, exposed for reuse.
Verdict classify_trend(std::span<const std::size_t> schedule, std::span<const double> phi_values,
                       std::span<const double> luxemburg_values, const TrendThresholds& thresholds);

}  // namespace fuzzyces
