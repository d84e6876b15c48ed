#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzzyces/fuzzy_real.hpp"
#include "fuzzyces/sequence.hpp"

namespace fuzzyces {

/// n choose r in exact integer arithmetic. Throws InvalidInput for r > n and
/// std::overflow_error when the result does not fit in 64 bits.
std::uint64_t binom(std::uint64_t n, std::uint64_t r);

/// Generalized difference of gap m and order n at index k:
///   sum_{r=0}^{n} (-1)^r C(n, r) X_{k + r m}
/// evaluated cut-wise. n = 0 returns X_k.
FuzzyReal delta_binomial(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t k);

/// Same value computed as the n-fold difference D^n_k = D^{n-1}_k - D^{n-1}_{k+m}.
FuzzyReal delta_iterative(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t k);

/// Binomial form over a materialized prefix: values[i] holds X_{i+1}.
FuzzyReal delta_binomial(std::span<const FuzzyReal> values, std::size_t m, std::size_t n, std::size_t k);

/// Differences for every k with k + n m <= values.size().
std::vector<FuzzyReal> delta_window(std::span<const FuzzyReal> values, std::size_t m, std::size_t n);

/// The lazily evaluated sequence k -> delta_binomial(x, m, n, k). Its known
/// length shrinks by n m.
FuzzySeq delta_seq(const FuzzySeq& x, std::size_t m, std::size_t n);

}  // namespace fuzzyces
