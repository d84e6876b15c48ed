#include "fuzzyces/sequence.hpp"

#include <memory>

#include "fuzzyces/error.hpp"

namespace fuzzyces {

FuzzySeq::FuzzySeq(Generator generator, std::optional<std::size_t> known_length, std::string label)
    : generator_(std::move(generator)), known_length_(known_length), label_(std::move(label)) {
  if (!generator_) throw InvalidInput("fuzzy sequence needs a generator");
}

FuzzySeq FuzzySeq::zero() {
  return FuzzySeq([](std::size_t) { return FuzzyReal::crisp(0.0); }, std::nullopt, "zero");
}

FuzzySeq FuzzySeq::constant(FuzzyReal value, std::string label) {
  return FuzzySeq([value = std::move(value)](std::size_t) { return value; }, std::nullopt, std::move(label));
}

FuzzySeq FuzzySeq::from_values(std::vector<FuzzyReal> values, bool pad_with_zero, std::string label) {
  auto shared = std::make_shared<const std::vector<FuzzyReal>>(std::move(values));
  std::optional<std::size_t> length;
  if (!pad_with_zero) length = shared->size();
  return FuzzySeq(
      [shared](std::size_t k) { return k <= shared->size() ? (*shared)[k - 1] : FuzzyReal::crisp(0.0); },
      length, std::move(label));
}

bool FuzzySeq::defined_at(std::size_t k) const noexcept {
  return k >= 1 && (!known_length_ || k <= *known_length_);
}

FuzzyReal FuzzySeq::at(std::size_t k) const {
  if (k == 0) throw InvalidInput("fuzzy sequences are indexed from 1");
  if (known_length_ && k > *known_length_) {
    throw OutOfRange("index " + std::to_string(k) + " beyond known length " + std::to_string(*known_length_) +
                     (label_.empty() ? std::string{} : " of " + label_));
  }
  return generator_(k);
}

std::vector<FuzzyReal> FuzzySeq::take(std::size_t count, std::size_t first) const {
  std::vector<FuzzyReal> out;
  out.reserve(count);
  for (std::size_t k = first; k < first + count; ++k) out.push_back(at(k));
  return out;
}

}  // namespace fuzzyces
