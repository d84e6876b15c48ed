#include "fuzzyces/fuzzy_real.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyces/error.hpp"

namespace fuzzyces {

namespace {

std::string describe_level(std::size_t i, const FuzzyReal::Level& level) {
  std::ostringstream os;
  os << "level " << i << " (alpha=" << level.alpha << ", cut=" << level.cut << ")";
  return os.str();
}

Interval interpolate(std::span<const FuzzyReal::Level> levels, double alpha) {
  auto upper = std::upper_bound(levels.begin(), levels.end(), alpha,
                                [](double a, const FuzzyReal::Level& l) { return a < l.alpha; });
  if (upper == levels.begin()) return levels.front().cut;
  auto lower = std::prev(upper);
  if (lower->alpha == alpha || upper == levels.end()) return lower->cut;

  const double t = (alpha - lower->alpha) / (upper->alpha - lower->alpha);
  const Interval& a = lower->cut;
  const Interval& b = upper->cut;
  Interval out{a.lo + t * (b.lo - a.lo), a.hi + t * (b.hi - a.hi)};
  out.lo = std::clamp(out.lo, a.lo, b.lo);
  out.hi = std::clamp(out.hi, b.hi, a.hi);
  if (out.lo > out.hi) out.lo = out.hi = out.midpoint();
  return out;
}

std::vector<Interval> resample(const FuzzyReal& x, std::span<const double> grid) {
  std::vector<Interval> cuts;
  cuts.reserve(grid.size());
  for (double a : grid) cuts.push_back(interpolate(x.levels(), a));
  return cuts;
}

Interval abs_cut(const Interval& c) {
  if (c.lo >= 0.0) return c;
  if (c.hi <= 0.0) return {-c.hi, -c.lo};
  return {0.0, std::max(-c.lo, c.hi)};
}

// Root of the linear function through (a0, f0), (a1, f1), if the sign change
// is strict.
void push_root(std::vector<double>& out, double a0, double a1, double f0, double f1) {
  if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
    const double r = a0 + (a1 - a0) * (f0 / (f0 - f1));
    if (r > a0 && r < a1) out.push_back(r);
  }
}

}  // namespace

FuzzyReal::FuzzyReal() : levels_{{0.0, {0.0, 0.0}}, {1.0, {0.0, 0.0}}} {}

FuzzyReal FuzzyReal::from_levels(std::vector<Level> levels) {
  if (levels.size() < 2) throw InvalidInput("fuzzy real needs at least the alpha=0 and alpha=1 levels");
  if (levels.front().alpha != 0.0) throw InvalidInput("first level must have alpha = 0");
  if (levels.back().alpha != 1.0) throw InvalidInput("last level must have alpha = 1");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Level& l = levels[i];
    if (!std::isfinite(l.alpha) || !std::isfinite(l.cut.lo) || !std::isfinite(l.cut.hi))
      throw InvalidInput("non-finite value at " + describe_level(i, l));
    if (l.cut.lo > l.cut.hi) throw InvalidInput("lo > hi at " + describe_level(i, l));
    if (i == 0) continue;
    const Level& prev = levels[i - 1];
    if (!(l.alpha > prev.alpha)) throw InvalidInput("alphas not strictly increasing at " + describe_level(i, l));
    if (l.cut.lo < prev.cut.lo || l.cut.hi > prev.cut.hi)
      throw InvalidInput("cuts not nested at " + describe_level(i, l));
  }
  return FuzzyReal(std::move(levels));
}

FuzzyReal FuzzyReal::from_triples(std::span<const Triple> triples) {
  std::vector<Level> levels;
  levels.reserve(triples.size());
  for (const auto& t : triples) levels.push_back({t[0], {t[1], t[2]}});
  return from_levels(std::move(levels));
}

FuzzyReal FuzzyReal::crisp(double r) {
  if (!std::isfinite(r)) throw InvalidInput("crisp value must be finite");
  return FuzzyReal({{0.0, {r, r}}, {1.0, {r, r}}});
}

FuzzyReal FuzzyReal::triangular(double center, double left_spread, double right_spread) {
  if (!std::isfinite(center) || !std::isfinite(left_spread) || !std::isfinite(right_spread))
    throw InvalidInput("triangular parameters must be finite");
  if (left_spread < 0.0 || right_spread < 0.0) throw InvalidInput("triangular spreads must be non-negative");
  return FuzzyReal({{0.0, {center - left_spread, center + right_spread}}, {1.0, {center, center}}});
}

FuzzyReal FuzzyReal::assemble(std::vector<Level> levels) {
  Interval& top = levels.back().cut;
  if (top.lo > top.hi) top.lo = top.hi = top.midpoint();
  for (std::size_t i = levels.size() - 1; i-- > 0;) {
    Interval& c = levels[i].cut;
    c.lo = std::min(c.lo, levels[i + 1].cut.lo);
    c.hi = std::max(c.hi, levels[i + 1].cut.hi);
  }
  for (const Level& l : levels) {
    if (!std::isfinite(l.cut.lo) || !std::isfinite(l.cut.hi))
      throw InvalidInput("fuzzy arithmetic overflowed to a non-finite endpoint");
  }
  return FuzzyReal(std::move(levels));
}

std::vector<FuzzyReal::Triple> FuzzyReal::to_triples() const {
  std::vector<Triple> out;
  out.reserve(levels_.size());
  for (const auto& l : levels_) out.push_back({l.alpha, l.cut.lo, l.cut.hi});
  return out;
}

Interval FuzzyReal::alpha_cut(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in [0, 1]");
  return interpolate(levels_, alpha);
}

double FuzzyReal::membership_grade(double t) const {
  if (!support().contains(t)) return 0.0;
  const std::size_t last = levels_.size() - 1;

  // sup{alpha : lo(alpha) <= t}; lo is non-decreasing so the set is [0, a].
  double left = 1.0;
  for (std::size_t i = last + 1; i-- > 0;) {
    if (levels_[i].cut.lo <= t) {
      if (i < last) {
        const Level& a = levels_[i];
        const Level& b = levels_[i + 1];
        left = a.alpha + (t - a.cut.lo) / (b.cut.lo - a.cut.lo) * (b.alpha - a.alpha);
      }
      break;
    }
  }
  double right = 1.0;
  for (std::size_t i = last + 1; i-- > 0;) {
    if (levels_[i].cut.hi >= t) {
      if (i < last) {
        const Level& a = levels_[i];
        const Level& b = levels_[i + 1];
        right = a.alpha + (a.cut.hi - t) / (a.cut.hi - b.cut.hi) * (b.alpha - a.alpha);
      }
      break;
    }
  }
  return std::clamp(std::min(left, right), 0.0, 1.0);
}

bool FuzzyReal::is_crisp() const noexcept {
  const double v = levels_.front().cut.lo;
  return std::all_of(levels_.begin(), levels_.end(),
                     [v](const Level& l) { return l.cut.lo == v && l.cut.hi == v; });
}

std::vector<double> merged_alpha_grid(const FuzzyReal& x, const FuzzyReal& y) {
  std::vector<double> grid;
  grid.reserve(x.levels().size() + y.levels().size());
  auto xs = x.levels();
  auto ys = y.levels();
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    double next;
    if (j == ys.size() || (i < xs.size() && xs[i].alpha < ys[j].alpha)) {
      next = xs[i++].alpha;
    } else if (i == xs.size() || ys[j].alpha < xs[i].alpha) {
      next = ys[j++].alpha;
    } else {
      next = xs[i].alpha;
      ++i;
      ++j;
    }
    grid.push_back(next);
  }
  return grid;
}

FuzzyReal add(const FuzzyReal& x, const FuzzyReal& y) {
  const auto grid = merged_alpha_grid(x, y);
  const auto cx = resample(x, grid);
  const auto cy = resample(y, grid);
  std::vector<FuzzyReal::Level> levels(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) levels[i] = {grid[i], cx[i] + cy[i]};
  return FuzzyReal::assemble(std::move(levels));
}

FuzzyReal sub(const FuzzyReal& x, const FuzzyReal& y) {
  const auto grid = merged_alpha_grid(x, y);
  const auto cx = resample(x, grid);
  const auto cy = resample(y, grid);
  std::vector<FuzzyReal::Level> levels(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) levels[i] = {grid[i], cx[i] - cy[i]};
  return FuzzyReal::assemble(std::move(levels));
}

FuzzyReal scale(double c, const FuzzyReal& x) {
  if (!std::isfinite(c)) throw InvalidInput("scale factor must be finite");
  std::vector<FuzzyReal::Level> levels(x.levels().begin(), x.levels().end());
  for (auto& l : levels) l.cut = scale(c, l.cut);
  return FuzzyReal::assemble(std::move(levels));
}

FuzzyReal abs_value(const FuzzyReal& x) {
  // |.| is piecewise linear on each segment once the zero crossings of lo,
  // hi and lo + hi are inserted as extra levels.
  const auto src = x.levels();
  std::vector<double> grid;
  for (std::size_t i = 0; i < src.size(); ++i) {
    grid.push_back(src[i].alpha);
    if (i + 1 == src.size()) break;
    const auto& a = src[i];
    const auto& b = src[i + 1];
    std::vector<double> roots;
    push_root(roots, a.alpha, b.alpha, a.cut.lo, b.cut.lo);
    push_root(roots, a.alpha, b.alpha, a.cut.hi, b.cut.hi);
    push_root(roots, a.alpha, b.alpha, a.cut.lo + a.cut.hi, b.cut.lo + b.cut.hi);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    grid.insert(grid.end(), roots.begin(), roots.end());
  }
  std::vector<FuzzyReal::Level> levels(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) levels[i] = {grid[i], abs_cut(interpolate(src, grid[i]))};
  return FuzzyReal::assemble(std::move(levels));
}

double d_bar(const FuzzyReal& x, const FuzzyReal& y) {
  const auto grid = merged_alpha_grid(x, y);
  double best = 0.0;
  for (double a : grid) {
    best = std::max(best, endpoint_distance(interpolate(x.levels(), a), interpolate(y.levels(), a)));
  }
  return best;
}

bool fuzzy_leq(const FuzzyReal& x, const FuzzyReal& y) {
  const auto grid = merged_alpha_grid(x, y);
  for (double a : grid) {
    const Interval cx = interpolate(x.levels(), a);
    const Interval cy = interpolate(y.levels(), a);
    if (cx.lo > cy.lo || cx.hi > cy.hi) return false;
  }
  return true;
}

bool operator==(const FuzzyReal& x, const FuzzyReal& y) {
  const auto grid = merged_alpha_grid(x, y);
  for (double a : grid) {
    if (interpolate(x.levels(), a) != interpolate(y.levels(), a)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const FuzzyReal& x) {
  os << '{';
  bool first = true;
  for (const auto& l : x.levels()) {
    if (!first) os << ", ";
    first = false;
    os << l.alpha << ':' << l.cut;
  }
  return os << '}';
}

}  // namespace fuzzyces
