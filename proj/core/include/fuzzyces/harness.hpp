#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzyces/functionals.hpp"
#include "fuzzyces/orlicz.hpp"
#include "fuzzyces/sequence.hpp"

namespace fuzzyces::harness {

struct SequencePair {
  FuzzySeq x;
  FuzzySeq y;
};

/// X_k = crisp(k); Y keeps X at odd k and is 0 at even k (the canonical
/// pre-image of X restricted to the even indices). Second differences of gap
/// 3 vanish on X but grow linearly on Y.
SequencePair linear_and_odd_preimage();

/// X_k = crisp(k); Y = (X_1, X_2, X_4, X_3, X_9, X_5, X_16, X_6, ...): squares
/// at odd positions, the remaining indices in order at even positions.
SequencePair linear_and_square_interleave();

/// X_k = tent(0, 1/k^2), Y_k = tent(0, k^2). Both are nowhere zero.
SequencePair shrinking_and_widening_tents();

/// j-th positive integer that is not a perfect square (j >= 1).
std::size_t nth_non_square(std::size_t j);

/// Closed form d_bar(Delta_3 X_k, 0) for the shrinking tents.
double shrinking_tent_gap3_distance(std::size_t k);

/// Triangular fuzzy reals with centers in [-5, 5] and spreads in [0, 2],
/// drawn from a generator seeded by (seed, k) so that at(k) is reproducible
/// and independent of evaluation order.
FuzzySeq random_triangular_sequence(std::uint64_t seed, std::string label = {});

/// Like random_triangular_sequence, scaled by 2^-k.
FuzzySeq random_decaying_sequence(std::uint64_t seed, std::string label = {});

/// Crisp arithmetic and geometric sequences, tents with spreads k^-s for
/// s in {1, 2, 3}, the counterexample pairs, the zero sequence and two
/// seeded random decaying sequences.
std::vector<FuzzySeq> default_corpus(std::uint64_t seed);

enum class ExperimentVerdict { consistent, inconsistent, inconclusive };
std::string_view to_string(ExperimentVerdict v) noexcept;

struct Observation {
  std::string input;
  std::string quantity;
  double value;
};

struct ExperimentResult {
  std::string name;
  std::string claim;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Observation> observations;
  std::vector<std::string> notes;
  ExperimentVerdict verdict = ExperimentVerdict::inconclusive;
};

struct CounterexampleOptions {
  double rho_ref = 1.0;
  DiagnosticOptions diagnostic{};
  /// Expect the member sequence to diverge and the counterpart to be
  /// bounded. Used as a negative control.
  bool invert_expectation = false;
  /// Replace the counterpart by the member sequence.
  bool control = false;
};

/// Non-solidity: the linear sequence is bounded, its odd pre-image is not,
/// although |Y_k| <= |X_k| on every cut.
ExperimentResult run_solidity_check(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                                    std::span<const std::size_t> schedule, const CounterexampleOptions& options = {});

/// Non-symmetry: the linear sequence is bounded, the square interleave of it
/// is not.
ExperimentResult run_symmetry_check(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap, std::size_t order,
                                    std::span<const std::size_t> schedule, const CounterexampleOptions& options = {});

/// Not convergence-free: shrinking tents are bounded, widening tents with the
/// same (empty) zero set are not.
ExperimentResult run_convergence_free_check(const SpaceKind& kind, const OrliczSpec& m, std::size_t gap,
                                            std::size_t order, std::span<const std::size_t> schedule,
                                            const CounterexampleOptions& options = {});

struct InclusionOptions {
  double rho_ref = 1.0;
  DiagnosticOptions diagnostic{};
};

/// Inclusion orderings between the five spaces on a corpus, at truncation
/// scale N (schedule N, 2N, 4N):
///  - rho*(Cp) <= rho*(Op) at every truncation;
///  - bounded at difference order j implies not divergent at j + 1, and
///    bounded at order 0 implies not divergent at order n;
///  - the pointwise triangle bound d(D^{j+1}_k) <= d(D^j_k) + d(D^j_{k+m}) and
///    its consequence rho*_{j+1}(N) <= 2 rho*_j(N + m) for Lp;
///  - bounded for exponent p implies not divergent for q > p (Cp and Lp).
ExperimentResult run_inclusion_matrix(const OrliczSpec& m, std::size_t gap, std::size_t order, double p, double q,
                                      const std::vector<FuzzySeq>& corpus, std::size_t n_base,
                                      const InclusionOptions& options = {});

/// Closure under composition and sums of Orlicz functions: bounded under M1
/// implies not divergent under M o M1; bounded under M1 and M2 implies not
/// divergent under M1 + M2. Also reports the sum identity and Delta_2
/// constants of the inputs.
ExperimentResult run_orlicz_closure(const OrliczSpec& outer, const OrliczSpec& m1, const OrliczSpec& m2,
                                    std::size_t gap, std::size_t order, const SpaceKind& kind,
                                    const std::vector<FuzzySeq>& corpus, std::size_t n_base,
                                    const InclusionOptions& options = {});

struct MetricAxiomOptions {
  std::size_t triples = 50;
  std::size_t count = 20;  // truncation N
  double tol = 1e-12;      // Luxemburg tolerance
  double triangle_slack = 1e-9;
};

/// Symmetry, f(X, X) = 0 and the triangle inequality for the f-metric of every
/// kind on random triangular sequence triples.
ExperimentResult run_metric_axioms(const std::vector<SpaceKind>& kinds, const OrliczSpec& m, std::size_t gap,
                                   std::size_t order, std::uint64_t seed, const MetricAxiomOptions& options = {});

/// Closed-form difference distances of the counterexample sequences for
/// k = 1..k_max.
ExperimentResult run_closed_forms(std::size_t k_max);

struct CounterexampleConfig {
  SpaceKind kind;
  OrliczSpec orlicz = OrliczSpec::identity();
  std::size_t gap = 1;
  std::size_t order = 1;
  std::vector<std::size_t> schedule{50, 100, 200};
  bool invert_expectation = false;
};

struct InclusionConfig {
  OrliczSpec orlicz = OrliczSpec::identity();
  std::size_t gap = 3;
  std::size_t order = 2;
  double p = 1.0;
  double q = 2.0;
  std::size_t n_base = 50;
};

struct ClosureConfig {
  OrliczSpec outer = OrliczSpec::cube();
  OrliczSpec m1 = OrliczSpec::identity();
  OrliczSpec m2 = OrliczSpec::power(2.0);
  SpaceKind kind = SpaceKind::cinf();
  std::size_t gap = 3;
  std::size_t order = 1;
  std::size_t n_base = 50;
};

struct MetricAxiomConfig {
  OrliczSpec orlicz = OrliczSpec::identity();
  std::size_t gap = 2;
  std::size_t order = 1;
  MetricAxiomOptions options{};
};

/// Parameters of the full verification suite. Defaults reproduce the
/// counterexample configurations (M(x) = |x| and x^3, gaps 3 and 4).
struct SuiteConfig {
  CounterexampleConfig solidity{SpaceKind::cp(2.0), OrliczSpec::identity(), 3, 2, {50, 100, 200}, false};
  CounterexampleConfig symmetry{SpaceKind::cinf(), OrliczSpec::identity(), 4, 1, {50, 100, 200}, false};
  CounterexampleConfig convergence_free{SpaceKind::cinf(), OrliczSpec::cube(), 3, 1, {50, 100, 200}, false};
  InclusionConfig inclusion{};
  ClosureConfig closure{};
  MetricAxiomConfig metric_axioms{};
  std::size_t closed_form_k_max = 200;
  std::uint64_t seed = 20110721;
  double rho_ref = 1.0;
  DiagnosticOptions diagnostic{};
};

/// Runs every experiment in a fixed order.
std::vector<ExperimentResult> run_suite(const SuiteConfig& config);

}  // namespace fuzzyces::harness
