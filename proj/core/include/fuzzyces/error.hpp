#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyces {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a sequence is indexed outside its known length.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when an iterative numeric procedure gives up. Carries the last
/// bracket so callers can report where the search stalled.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace fuzzyces
