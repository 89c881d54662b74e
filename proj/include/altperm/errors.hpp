#pragma once

#include <stdexcept>
#include <string>

namespace altperm {

// Input outside the mathematical domain of an operation (odd length where even
// is required, non-invertible constant term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state that valid inputs can never reach, e.g. a negative exponent left in
// a coefficient that must be a polynomial.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent computations of the same quantity disagree.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string what, std::string lhs, std::string rhs, std::string difference)
      : std::runtime_error(what + ": " + lhs + " vs " + rhs + " (difference " + difference + ")"),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)),
        difference_(std::move(difference)) {}

  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }
  const std::string& difference() const noexcept { return difference_; }

 private:
  std::string lhs_;
  std::string rhs_;
  std::string difference_;
};

}  // namespace altperm
