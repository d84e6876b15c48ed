#include <doctest.h>

#include <cmath>
#include <limits>

#include "fuzzyces/error.hpp"
#include "fuzzyces/fuzzy_real.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fuzzyces;

namespace {

void check_cut(const FuzzyReal& x, double alpha, double lo, double hi, double eps = 1e-15) {
  const auto c = x.alpha_cut(alpha);
  CHECK(c.lo == doctest::Approx(lo).epsilon(eps));
  CHECK(c.hi == doctest::Approx(hi).epsilon(eps));
}

bool well_formed(const FuzzyReal& x) {
  const auto levels = x.levels();
  if (levels.front().alpha != 0.0 || levels.back().alpha != 1.0) return false;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const auto& c = levels[j].cut;
    if (!(c.lo <= c.hi) || !std::isfinite(c.lo) || !std::isfinite(c.hi)) return false;
    if (j == 0) continue;
    const auto& p = levels[j - 1];
    if (!(levels[j].alpha > p.alpha) || c.lo < p.cut.lo || c.hi > p.cut.hi) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("crisp numbers have constant cuts") {
  check_cut(FuzzyReal::crisp(0.0), 0.3, 0, 0);
  check_cut(FuzzyReal::crisp(1.0), 0.0, 1, 1);
  check_cut(FuzzyReal::crisp(-3.0), 0.5, -3, -3);
  check_cut(FuzzyReal::crisp(2.0), 0.7, 2, 2);
  CHECK(FuzzyReal::crisp(4.0).is_crisp());
  CHECK(FuzzyReal() == FuzzyReal::crisp(0.0));
  CHECK_THROWS_AS(FuzzyReal::crisp(std::numeric_limits<double>::infinity()), InvalidInput);
  CHECK_THROWS_AS(FuzzyReal::crisp(std::nan("")), InvalidInput);
}

TEST_CASE("triangular cuts interpolate the spreads") {
  check_cut(FuzzyReal::triangular(0, 1, 1), 0.0, -1, 1);
  check_cut(FuzzyReal::triangular(0, 1, 1), 1.0, 0, 0);
  check_cut(FuzzyReal::triangular(0, 1, 1), 0.25, -0.75, 0.75);
  check_cut(FuzzyReal::triangular(0, 0.25, 0.25), 0.5, -0.125, 0.125);
  check_cut(FuzzyReal::triangular(2, 1, 3), 0.5, 1.5, 3.5);
  CHECK(FuzzyReal::triangular(5, 0, 0) == FuzzyReal::crisp(5));
  CHECK_THROWS_AS(FuzzyReal::triangular(0, -1, 1), InvalidInput);
}

TEST_CASE("alpha_cut rejects levels outside [0, 1]") {
  const auto x = FuzzyReal::triangular(0, 1, 1);
  CHECK_THROWS_AS(x.alpha_cut(-0.01), InvalidInput);
  CHECK_THROWS_AS(x.alpha_cut(1.01), InvalidInput);
  CHECK_THROWS_AS(x.alpha_cut(std::nan("")), InvalidInput);
}

TEST_CASE("membership grade") {
  CHECK(FuzzyReal::crisp(3).membership_grade(3) == 1.0);
  CHECK(FuzzyReal::crisp(3).membership_grade(2.9) == 0.0);
  const auto t = FuzzyReal::triangular(0, 1, 1);
  CHECK(t.membership_grade(0.5) == doctest::Approx(0.5));
  CHECK(t.membership_grade(-0.25) == doctest::Approx(0.75));
  CHECK(t.membership_grade(1.5) == 0.0);
  CHECK(t.membership_grade(0.0) == 1.0);
}

TEST_CASE("from_levels validates the representation") {
  using L = FuzzyReal::Level;
  CHECK_NOTHROW(FuzzyReal::from_levels({L{0, {-1, 1}}, L{1, {0, 0}}}));
  CHECK_THROWS_AS(FuzzyReal::from_levels({}), InvalidInput);
  CHECK_THROWS_AS(FuzzyReal::from_levels({L{0.1, {-1, 1}}, L{1, {0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(FuzzyReal::from_levels({L{0, {-1, 1}}, L{0.9, {0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(FuzzyReal::from_levels({L{0, {-1, 1}}, L{0.5, {-2, 0}}, L{1, {0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(FuzzyReal::from_levels({L{0, {1, -1}}, L{1, {0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(FuzzyReal::from_levels({L{0, {-1, 1}}, L{0.5, {0, 0}}, L{0.5, {0, 0}}, L{1, {0, 0}}}), InvalidInput);
}

TEST_CASE("wire form round trips") {
  testgen::Gen g(11);
  for (int i = 0; i < 50; ++i) {
    const auto x = g.on_grid();
    const auto t = x.to_triples();
    CHECK(FuzzyReal::from_triples(t) == x);
  }
}

TEST_CASE("arithmetic examples") {
  CHECK(add(FuzzyReal::crisp(2), FuzzyReal::crisp(3)) == FuzzyReal::crisp(5));
  CHECK(add(FuzzyReal::triangular(0, 1, 1), FuzzyReal::triangular(0, 2, 2)) == FuzzyReal::triangular(0, 3, 3));
  CHECK(scale(-1, FuzzyReal::crisp(4)) == FuzzyReal::crisp(-4));
  CHECK(scale(0, FuzzyReal::triangular(1, 2, 3)) == FuzzyReal::crisp(0));
  CHECK(scale(-2, FuzzyReal::triangular(1, 1, 1)) == FuzzyReal::triangular(-2, 2, 2));
  CHECK(sub(FuzzyReal::crisp(5), FuzzyReal::crisp(3)) == FuzzyReal::crisp(2));
  // Interval subtraction widens; X - X is not 0.
  CHECK(sub(FuzzyReal::triangular(0, 1, 1), FuzzyReal::triangular(0, 1, 1)) == FuzzyReal::triangular(0, 2, 2));
  const auto x = FuzzyReal::triangular(1, 0.5, 2);
  CHECK(add(x, FuzzyReal::crisp(0)) == x);
  CHECK(sub(x, FuzzyReal::crisp(0)) == x);
  CHECK(-x == scale(-1, x));
}

TEST_CASE("abs_value examples") {
  CHECK(abs_value(FuzzyReal::crisp(-2)) == FuzzyReal::crisp(2));
  CHECK(abs_value(FuzzyReal::crisp(3)) == FuzzyReal::crisp(3));
  check_cut(abs_value(FuzzyReal::triangular(0, 1, 1)), 0.0, 0, 1);
  // Cut [-1 + 2a, 1 + a] straddles zero until a = 1/2.
  const auto y = abs_value(FuzzyReal::triangular(1, 2, 1));
  check_cut(y, 0.0, 0, 2);
  check_cut(y, 0.25, 0, 1.75);
  check_cut(y, 0.5, 0, 1.5);
  check_cut(y, 0.75, 0.5, 1.25);
  check_cut(y, 1.0, 1, 1);
}

TEST_CASE("arithmetic matches cut-wise interval arithmetic") {
  testgen::Gen g(2024);
  for (int i = 0; i < 300; ++i) {
    const auto x = g.on_grid(64);
    const auto y = g.on_grid(64);
    const double c = g.uniform(-3, 3);
    const auto s = add(x, y);
    const auto d = sub(x, y);
    const auto k = scale(c, x);
    const auto a = abs_value(d);
    for (const auto* r : {&s, &d, &k, &a}) CHECK(well_formed(*r));
    for (int j = 0; j <= 64; ++j) {
      const double alpha = j / 64.0;
      const auto cx = oracle::cut_at(x, alpha);
      const auto cy = oracle::cut_at(y, alpha);
      const auto cs = s.alpha_cut(alpha);
      const auto cd = d.alpha_cut(alpha);
      const auto ck = k.alpha_cut(alpha);
      const auto ca = a.alpha_cut(alpha);
      CHECK(cs.lo == doctest::Approx(cx.lo + cy.lo).epsilon(1e-12));
      CHECK(cs.hi == doctest::Approx(cx.hi + cy.hi).epsilon(1e-12));
      CHECK(cd.lo == doctest::Approx(cx.lo - cy.hi).epsilon(1e-12));
      CHECK(cd.hi == doctest::Approx(cx.hi - cy.lo).epsilon(1e-12));
      CHECK(ck.lo == doctest::Approx(std::min(c * cx.lo, c * cx.hi)).epsilon(1e-12));
      CHECK(ck.hi == doctest::Approx(std::max(c * cx.lo, c * cx.hi)).epsilon(1e-12));
      const double lo = cx.lo - cy.hi, hi = cx.hi - cy.lo;
      const double alo = lo >= 0 ? lo : (hi <= 0 ? -hi : 0.0);
      const double ahi = lo >= 0 ? hi : (hi <= 0 ? -lo : std::max(-lo, hi));
      CHECK(ca.lo == doctest::Approx(alo).epsilon(1e-12).scale(1.0));
      CHECK(ca.hi == doctest::Approx(ahi).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("abs_value is exact between stored levels") {
  // The modulus of a cut that crosses zero bends; the breakpoint must be stored.
  testgen::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = g.on_grid(8);
    const auto a = abs_value(x);
    for (int j = 0; j <= 997; ++j) {
      const double alpha = j / 997.0;
      const auto c = oracle::cut_at(x, alpha);
      const double lo = c.lo >= 0 ? c.lo : (c.hi <= 0 ? -c.hi : 0.0);
      const double hi = std::max(std::abs(c.lo), std::abs(c.hi));
      const auto got = a.alpha_cut(alpha);
      CHECK(std::abs(got.lo - lo) <= 1e-12);
      CHECK(std::abs(got.hi - hi) <= 1e-12);
    }
  }
}

TEST_CASE("d_bar examples") {
  CHECK(d_bar(FuzzyReal::crisp(3), FuzzyReal::crisp(5)) == 2.0);
  const auto x = FuzzyReal::triangular(1, 2, 0.5);
  CHECK(d_bar(x, x) == 0.0);
  for (double a : {0.25, 1.0, 7.5}) CHECK(d_bar(FuzzyReal::triangular(0, a, a), FuzzyReal::crisp(0)) == a);
}

TEST_CASE("d_bar equals a dense-grid brute force") {
  testgen::Gen g(77);
  for (int i = 0; i < 300; ++i) {
    const auto x = g.on_grid();
    const auto y = g.on_grid();
    CHECK(std::abs(d_bar(x, y) - oracle::dense_d_bar(x, y)) <= 1e-12);
  }
}

TEST_CASE("d_bar is a metric") {
  testgen::Gen g(99);
  for (int i = 0; i < 500; ++i) {
    const auto x = g.on_grid(32), y = g.on_grid(32), z = g.on_grid(32);
    CHECK(d_bar(x, y) == d_bar(y, x));
    CHECK(d_bar(x, x) == 0.0);
    CHECK(d_bar(x, y) <= d_bar(x, z) + d_bar(z, y) + 1e-12);
    if (d_bar(x, y) == 0.0) CHECK(x == y);
  }
}

TEST_CASE("d_bar is translation invariant under crisp shifts") {
  testgen::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = g.on_grid(16), y = g.on_grid(16);
    const auto c = FuzzyReal::crisp(g.uniform(-10, 10));
    CHECK(d_bar(add(x, c), add(y, c)) == doctest::Approx(d_bar(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("merged grid and fuzzy order") {
  const auto x = FuzzyReal::from_triples(std::vector<FuzzyReal::Triple>{{0, -1, 1}, {0.5, -0.5, 0.5}, {1, 0, 0}});
  const auto y = FuzzyReal::from_triples(std::vector<FuzzyReal::Triple>{{0, -2, 2}, {0.25, -1, 1}, {1, 0, 0}});
  CHECK(merged_alpha_grid(x, y) == std::vector<double>{0, 0.25, 0.5, 1});
  CHECK(fuzzy_leq(FuzzyReal::crisp(1), FuzzyReal::crisp(2)));
  CHECK_FALSE(fuzzy_leq(FuzzyReal::crisp(2), FuzzyReal::crisp(1)));
  CHECK(fuzzy_leq(FuzzyReal::triangular(0, 1, 1), FuzzyReal::triangular(1, 1, 1)));
  CHECK_FALSE(fuzzy_leq(FuzzyReal::triangular(0, 1, 1), FuzzyReal::triangular(0, 2, 2)));
  CHECK(fuzzy_leq(abs_value(FuzzyReal::crisp(0)), abs_value(FuzzyReal::crisp(-5))));
}
