#include <doctest.h>

#include <cmath>
#include <string>

#include "fuzzyces/difference.hpp"
#include "fuzzyces/error.hpp"
#include "fuzzyces/harness.hpp"
#include "oracles.hpp"

using namespace fuzzyces;
using namespace fuzzyces::harness;

namespace {

const std::vector<std::size_t> schedule{50, 100, 200};

double observed(const ExperimentResult& r, const std::string& input, const std::string& quantity) {
  for (const auto& o : r.observations) {
    if (o.input == input && o.quantity == quantity) return o.value;
  }
  FAIL("missing observation " << input << " / " << quantity);
  return 0;
}

}  // namespace

TEST_CASE("non-squares match enumeration") {
  for (std::size_t j = 1; j <= 2000; ++j) CHECK(nth_non_square(j) == oracle::brute_nth_non_square(j));
  CHECK_THROWS_AS(nth_non_square(0), InvalidInput);
}

TEST_CASE("counterexample sequences") {
  const auto a = linear_and_odd_preimage();
  CHECK(a.x.at(7) == FuzzyReal::crisp(7));
  CHECK(a.y.at(7) == FuzzyReal::crisp(7));
  CHECK(a.y.at(8) == FuzzyReal::crisp(0));

  // (X_1, X_2, X_4, X_3, X_9, X_5, X_16, X_6, X_25, X_7, ...)
  const auto b = linear_and_square_interleave();
  const std::vector<double> want{1, 2, 4, 3, 9, 5, 16, 6, 25, 7, 36, 8, 49, 10};
  for (std::size_t k = 1; k <= want.size(); ++k) CHECK(b.y.at(k) == FuzzyReal::crisp(want[k - 1]));

  // Y is a bijection of the positive integers: every value up to 40^2 shows up once.
  std::vector<int> hits(1601, 0);
  for (std::size_t k = 1; k <= 2 * 1560; ++k) {
    const auto v = static_cast<std::size_t>(b.y.at(k).core().lo);
    if (v <= 1600) ++hits[v];
  }
  for (std::size_t v = 1; v <= 1600; ++v) CHECK(hits[v] == 1);

  const auto c = shrinking_and_widening_tents();
  CHECK(c.x.at(2) == FuzzyReal::triangular(0, 0.25, 0.25));
  CHECK(c.y.at(3) == FuzzyReal::triangular(0, 9, 9));
}

TEST_CASE("closed form of the shrinking-tent differences") {
  for (std::size_t k = 1; k <= 200; ++k) {
    const double kk = static_cast<double>(k);
    CHECK(shrinking_tent_gap3_distance(k) == doctest::Approx(1 / (kk * kk) + 1 / ((kk + 3) * (kk + 3))).epsilon(1e-14));
  }
  const auto r = run_closed_forms(200);
  CHECK(r.verdict == ExperimentVerdict::consistent);
}

TEST_CASE("random sequences are reproducible and order independent") {
  const auto a = random_triangular_sequence(42);
  const auto b = random_triangular_sequence(42);
  const auto c = random_triangular_sequence(43);
  CHECK(a.at(17) == b.at(17));
  CHECK_FALSE(a.at(17) == c.at(17));
  const auto late = b.at(30);
  CHECK(a.at(30) == late);
  for (std::size_t k = 1; k <= 200; ++k) {
    const auto x = a.at(k);
    const double centre = x.core().lo;
    CHECK(centre >= -5);
    CHECK(centre <= 5);
    CHECK(centre - x.support().lo <= 2);
    CHECK(x.support().hi - centre <= 2);
  }
  const auto d = random_decaying_sequence(42);
  CHECK(d_bar(d.at(10), FuzzyReal()) <= 7.0 / 1024);
}

TEST_CASE("corpus is labelled") {
  const auto corpus = default_corpus(1);
  CHECK(corpus.size() >= 10);
  for (const auto& s : corpus) CHECK_FALSE(s.label().empty());
}

TEST_CASE("solidity counterexample") {
  const auto r = run_solidity_check(SpaceKind::cp(2), OrliczSpec::identity(), 3, 2, schedule);
  CHECK(r.verdict == ExperimentVerdict::consistent);
  CHECK(observed(r, "Y", "modulus-premise-violations") == 0);
  CHECK(observed(r, "X", "rho*(N=200)") == 0);

  CounterexampleOptions inverted;
  inverted.invert_expectation = true;
  CHECK(run_solidity_check(SpaceKind::cp(2), OrliczSpec::identity(), 3, 2, schedule, inverted).verdict ==
        ExperimentVerdict::inconsistent);

  CounterexampleOptions control;
  control.control = true;
  CHECK(run_solidity_check(SpaceKind::cp(2), OrliczSpec::identity(), 3, 2, schedule, control).verdict ==
        ExperimentVerdict::inconclusive);
}

TEST_CASE("convergence-free counterexample") {
  const auto r = run_convergence_free_check(SpaceKind::cinf(), OrliczSpec::cube(), 3, 1, schedule);
  CHECK(r.verdict == ExperimentVerdict::consistent);
  CHECK(observed(r, "Y", "zero-set-mismatches") == 0);
  CHECK(observed(r, "X", "closed-form-max-error") <= 1e-15);
}

TEST_CASE("symmetry counterexample grows linearly") {
  const auto r = run_symmetry_check(SpaceKind::cinf(), OrliczSpec::identity(), 4, 1, schedule);
  CHECK(observed(r, "X", "verdict") == 0);  // bounded
  CHECK(observed(r, "Y", "odd-index-growth-exponent") == doctest::Approx(1).epsilon(0.05));
  // Delta_4 Y at odd k = 2j - 1 is j^2 - (j + 2)^2 = -(4j + 4).
  const auto y = linear_and_square_interleave().y;
  for (std::size_t j = 1; j <= 50; ++j) {
    CHECK(delta_binomial(y, 4, 1, 2 * j - 1) == FuzzyReal::crisp(-(4.0 * j + 4)));
  }
  // Under the cube the same rearrangement diverges fast enough.
  const auto cube = run_symmetry_check(SpaceKind::cinf(), OrliczSpec::cube(), 4, 1, schedule);
  CHECK(cube.verdict == ExperimentVerdict::consistent);
}

TEST_CASE("inclusion and closure experiments find no violations") {
  const auto corpus = default_corpus(7);
  const auto inc = run_inclusion_matrix(OrliczSpec::identity(), 3, 2, 1, 2, corpus, 25);
  CHECK(observed(inc, "corpus", "violations") == 0);
  CHECK(inc.verdict == ExperimentVerdict::consistent);
  const auto clo = run_orlicz_closure(OrliczSpec::cube(), OrliczSpec::identity(), OrliczSpec::power(2), 3, 1,
                                      SpaceKind::cinf(), corpus, 25);
  CHECK(observed(clo, "corpus", "violations") == 0);
  CHECK(observed(clo, "sum", "identity-max-error") == 0);
  CHECK(observed(clo, "cube", "delta2-K") == doctest::Approx(4));
  CHECK(clo.verdict == ExperimentVerdict::consistent);
  CHECK_THROWS_AS(run_inclusion_matrix(OrliczSpec::identity(), 3, 2, 2, 2, corpus, 25), InvalidInput);
}

TEST_CASE("suite runs every experiment in order") {
  SuiteConfig c;
  c.metric_axioms.options.triples = 5;
  const auto results = run_suite(c);
  const std::vector<std::string> names{"solidity",         "symmetry",       "convergence-free", "inclusion-matrix",
                                       "orlicz-closure",   "metric-axioms", "closed-forms"};
  REQUIRE(results.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(results[i].name == names[i]);
    CHECK_FALSE(results[i].claim.empty());
    CHECK(results[i].verdict != ExperimentVerdict::inconsistent);
  }
  CHECK(to_string(ExperimentVerdict::consistent) == "consistent-with-paper");
}
