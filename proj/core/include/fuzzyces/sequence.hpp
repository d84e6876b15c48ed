#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyces/fuzzy_real.hpp"

namespace fuzzyces {

/// A sequence (X_k) of fuzzy reals indexed from 1, generated lazily.
/// The generator must be deterministic: at(k) returns the same value on every
/// call. An absent known_length means the sequence is conceptually infinite.
class FuzzySeq {
 public:
  using Generator = std::function<FuzzyReal(std::size_t)>;

  FuzzySeq(Generator generator, std::optional<std::size_t> known_length = std::nullopt, std::string label = {});

  /// The all-zero sequence.
  static FuzzySeq zero();
  static FuzzySeq constant(FuzzyReal value, std::string label = {});
  /// Finite list; when pad_with_zero is set the tail is 0 and the sequence is
  /// infinite, otherwise its known length is values.size().
  static FuzzySeq from_values(std::vector<FuzzyReal> values, bool pad_with_zero, std::string label = {});

  /// Throws InvalidInput for k = 0 and OutOfRange past the known length.
  FuzzyReal at(std::size_t k) const;
  bool defined_at(std::size_t k) const noexcept;

  /// X_first, ..., X_{first+count-1}, evaluated once each.
  std::vector<FuzzyReal> take(std::size_t count, std::size_t first = 1) const;

  std::optional<std::size_t> known_length() const noexcept { return known_length_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Generator generator_;
  std::optional<std::size_t> known_length_;
  std::string label_;
};

}  // namespace fuzzyces
