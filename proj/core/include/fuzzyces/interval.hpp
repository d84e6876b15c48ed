#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

namespace fuzzyces {

/// Closed bounded interval [lo, hi] with lo <= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double width() const noexcept { return hi - lo; }
  constexpr double midpoint() const noexcept { return 0.5 * (lo + hi); }
  constexpr bool contains(double t) const noexcept { return lo <= t && t <= hi; }
  constexpr bool contains(const Interval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

  friend constexpr Interval operator+(const Interval& a, const Interval& b) noexcept {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend constexpr Interval operator-(const Interval& a, const Interval& b) noexcept {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend constexpr Interval operator-(const Interval& a) noexcept { return {-a.hi, -a.lo}; }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo << ", " << x.hi << ']';
  }
};

constexpr Interval scale(double c, const Interval& x) noexcept {
  return c >= 0.0 ? Interval{c * x.lo, c * x.hi} : Interval{c * x.hi, c * x.lo};
}

/// Endpoint distance max(|lo - lo'|, |hi - hi'|).
inline double endpoint_distance(const Interval& a, const Interval& b) noexcept {
  return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

}  // namespace fuzzyces
