#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "altperm/laurent.hpp"
#include "altperm/rational.hpp"

namespace altperm {

// Polynomial in p, q with nonnegative integer coefficients: the distribution
// of one or two statistics over a set of permutations.
class DistributionPolynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  DistributionPolynomial() = default;

  // Throws DomainError on negative exponents or coefficients.
  void add(int ep, int eq, const BigInt& c);

  // Checkpoint between Laurent intermediates and final answers: every term
  // must have nonnegative exponents and a nonnegative integer coefficient,
  // otherwise InternalError naming `what`.
  static DistributionPolynomial from_laurent(const LaurentPolynomial& x, std::string_view what);
  LaurentPolynomial to_laurent() const;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(int ep, int eq) const;
  BigInt at_one() const;
  DistributionPolynomial at_p_one() const;
  DistributionPolynomial at_q_one() const;
  DistributionPolynomial swap_vars() const;
  int max_p_degree() const;
  int max_q_degree() const;

  DistributionPolynomial& operator+=(const DistributionPolynomial& o);
  friend DistributionPolynomial operator+(DistributionPolynomial a, const DistributionPolynomial& b) { return a += b; }
  friend DistributionPolynomial operator*(const DistributionPolynomial& a, const DistributionPolynomial& b);
  // c * p^ep * q^eq * this
  DistributionPolynomial shifted(int ep, int eq, const BigInt& c = 1) const;

  // "2q + 3q^2"; zero prints as "0".
  std::string to_string() const;

  friend bool operator==(const DistributionPolynomial&, const DistributionPolynomial&) = default;

 private:
  Terms terms_;
};

// Dense (p, q) exponent histogram used by the brute-force sweeps.
class CountGrid {
 public:
  explicit CountGrid(int max_exponent = 0)
      : dim_(max_exponent + 1), cells_(static_cast<std::size_t>(dim_) * dim_, 0) {}

  void add(int ep, int eq) { ++cells_[static_cast<std::size_t>(ep) * dim_ + eq]; }
  CountGrid& operator+=(const CountGrid& o);
  DistributionPolynomial to_polynomial() const;

 private:
  int dim_;
  std::vector<std::uint64_t> cells_;
};

// Throws VerificationError carrying both sides and their difference.
void require_agreement(std::string_view what, const DistributionPolynomial& lhs, const DistributionPolynomial& rhs);

}  // namespace altperm
