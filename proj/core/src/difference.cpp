#include "fuzzyces/difference.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "fuzzyces/error.hpp"

namespace fuzzyces {

namespace {

void check_gap(std::size_t m, std::size_t k) {
  if (m < 1) throw InvalidInput("difference gap m must be >= 1");
  if (k < 1) throw InvalidInput("difference index k must be >= 1");
}

// terms[r] holds X_{k + r m}.
FuzzyReal signed_binomial_sum(std::span<const FuzzyReal> terms) {
  const std::size_t n = terms.size() - 1;
  FuzzyReal acc = terms[0];
  for (std::size_t r = 1; r <= n; ++r) {
    const double c = static_cast<double>(binom(n, r));
    acc = add(acc, scale(r % 2 == 0 ? c : -c, terms[r]));
  }
  return acc;
}

std::vector<FuzzyReal> gather(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t k) {
  check_gap(m, k);
  const std::size_t last = k + n * m;
  if (!x.defined_at(last)) {
    throw OutOfRange("difference needs X_" + std::to_string(last) + " but sequence" +
                     (x.label().empty() ? std::string{} : " " + x.label()) + " has known length " +
                     std::to_string(x.known_length().value_or(0)));
  }
  std::vector<FuzzyReal> terms;
  terms.reserve(n + 1);
  for (std::size_t r = 0; r <= n; ++r) terms.push_back(x.at(k + r * m));
  return terms;
}

}  // namespace

std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
  if (r > n) throw InvalidInput("binom requires r <= n");
  if (r > n - r) r = n - r;
  __extension__ typedef unsigned __int128 u128;
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) is divisible by i since acc = C(n - r + i - 1, i - 1).
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

FuzzyReal delta_binomial(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t k) {
  const auto terms = gather(x, m, n, k);
  return signed_binomial_sum(terms);
}

FuzzyReal delta_iterative(const FuzzySeq& x, std::size_t m, std::size_t n, std::size_t k) {
  auto row = gather(x, m, n, k);
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t r = 0; r + level <= n; ++r) row[r] = sub(row[r], row[r + 1]);
  }
  return row[0];
}

FuzzyReal delta_binomial(std::span<const FuzzyReal> values, std::size_t m, std::size_t n, std::size_t k) {
  check_gap(m, k);
  if (k + n * m > values.size()) {
    throw OutOfRange("difference needs X_" + std::to_string(k + n * m) + " but only " +
                     std::to_string(values.size()) + " values are available");
  }
  std::vector<FuzzyReal> terms;
  terms.reserve(n + 1);
  for (std::size_t r = 0; r <= n; ++r) terms.push_back(values[k - 1 + r * m]);
  return signed_binomial_sum(terms);
}

std::vector<FuzzyReal> delta_window(std::span<const FuzzyReal> values, std::size_t m, std::size_t n) {
  if (m < 1) throw InvalidInput("difference gap m must be >= 1");
  std::vector<FuzzyReal> out;
  if (values.size() <= n * m) return out;
  const std::size_t count = values.size() - n * m;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.push_back(delta_binomial(values, m, n, k));
  return out;
}

FuzzySeq delta_seq(const FuzzySeq& x, std::size_t m, std::size_t n) {
  if (m < 1) throw InvalidInput("difference gap m must be >= 1");
  std::optional<std::size_t> length;
  if (auto l = x.known_length()) length = *l > n * m ? *l - n * m : 0;
  std::string label = x.label().empty() ? std::string{} : "delta(" + x.label() + ")";
  return FuzzySeq([x, m, n](std::size_t k) { return delta_binomial(x, m, n, k); }, length, std::move(label));
}

}  // namespace fuzzyces
