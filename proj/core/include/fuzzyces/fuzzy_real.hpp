#pragma once

#include <array>
#include <ostream>
#include <span>
#include <vector>

#include "fuzzyces/interval.hpp"

namespace fuzzyces {

/// A normal, convex fuzzy real number stored as a finite family of nested
/// alpha-cuts. Between stored levels both endpoint functions are linear in
/// alpha, so every operation in this header is exact on the representation.
///
/// Invariants (checked by from_levels, preserved by every operation):
///  - alphas strictly increasing, first 0, last 1;
///  - lo non-decreasing and hi non-increasing in alpha;
///  - lo <= hi at every level, all endpoints finite.
class FuzzyReal {
 public:
  struct Level {
    double alpha;
    Interval cut;

    friend bool operator==(const Level&, const Level&) = default;
  };

  /// Wire form: one [alpha, lo, hi] triple per stored level.
  using Triple = std::array<double, 3>;

  /// Crisp zero.
  FuzzyReal();

  static FuzzyReal from_levels(std::vector<Level> levels);
  static FuzzyReal from_triples(std::span<const Triple> triples);
  static FuzzyReal crisp(double r);
  static FuzzyReal triangular(double center, double left_spread, double right_spread);

  std::span<const Level> levels() const noexcept { return levels_; }
  std::vector<Triple> to_triples() const;

  /// Cut at the given level, interpolated linearly between stored levels.
  /// alpha = 0 is the closure of the support.
  Interval alpha_cut(double alpha) const;

  /// sup{alpha : t in cut(alpha)}; 0 outside the support closure.
  double membership_grade(double t) const;

  Interval support() const noexcept { return levels_.front().cut; }
  Interval core() const noexcept { return levels_.back().cut; }
  bool is_crisp() const noexcept;

  friend FuzzyReal add(const FuzzyReal& x, const FuzzyReal& y);
  friend FuzzyReal sub(const FuzzyReal& x, const FuzzyReal& y);
  friend FuzzyReal scale(double c, const FuzzyReal& x);
  friend FuzzyReal abs_value(const FuzzyReal& x);

 private:
  explicit FuzzyReal(std::vector<Level> levels) : levels_(std::move(levels)) {}

  // Accepts levels produced by arithmetic and clears ulp-sized violations of
  // nestedness left behind by rounding.
  static FuzzyReal assemble(std::vector<Level> levels);

  std::vector<Level> levels_;
};

FuzzyReal add(const FuzzyReal& x, const FuzzyReal& y);
FuzzyReal sub(const FuzzyReal& x, const FuzzyReal& y);
FuzzyReal scale(double c, const FuzzyReal& x);
FuzzyReal abs_value(const FuzzyReal& x);

/// sup over alpha of max(|lo_x - lo_y|, |hi_x - hi_y|). The supremum of a
/// piecewise-linear function sits on a breakpoint, so only the merged grid
/// is evaluated.
double d_bar(const FuzzyReal& x, const FuzzyReal& y);

/// Sorted union of both alpha grids.
std::vector<double> merged_alpha_grid(const FuzzyReal& x, const FuzzyReal& y);

/// Fuzzy partial order: lo_x <= lo_y and hi_x <= hi_y on every cut.
bool fuzzy_leq(const FuzzyReal& x, const FuzzyReal& y);

/// True when both numbers have identical cuts on the merged grid.
bool operator==(const FuzzyReal& x, const FuzzyReal& y);

inline FuzzyReal operator+(const FuzzyReal& x, const FuzzyReal& y) { return add(x, y); }
inline FuzzyReal operator-(const FuzzyReal& x, const FuzzyReal& y) { return sub(x, y); }
inline FuzzyReal operator-(const FuzzyReal& x) { return scale(-1.0, x); }
inline FuzzyReal operator*(double c, const FuzzyReal& x) { return scale(c, x); }

std::ostream& operator<<(std::ostream& os, const FuzzyReal& x);

}  // namespace fuzzyces
