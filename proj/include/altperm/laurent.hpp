#pragma once

#include <compare>
#include <map>
#include <string>

#include "altperm/rational.hpp"

namespace altperm {

// Exponent pair of p^p q^q. Ordered lexicographically (p first), which is the
// canonical term order everywhere in the library.
struct Monomial {
  int p = 0;
  int q = 0;

  auto operator<=>(const Monomial&) const = default;
};

// Sparse Laurent polynomial in p and q with exact rational coefficients.
// Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<Monomial, BigRational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const BigRational& c);  // NOLINT: constants embed implicitly
  LaurentPolynomial(long c) : LaurentPolynomial(BigRational(c)) {}  // NOLINT

  static LaurentPolynomial monomial(const BigRational& c, int ep, int eq);
  static LaurentPolynomial p() { return monomial(1, 1, 0); }
  static LaurentPolynomial q() { return monomial(1, 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  BigRational coefficient(int ep, int eq) const;
  BigRational constant_term() const { return coefficient(0, 0); }
  bool has_negative_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const BigRational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const BigRational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const BigRational& c, LaurentPolynomial a) { return a *= c; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Only monomials with nonzero coefficient are units of this ring.
  bool is_invertible() const noexcept { return is_monomial(); }
  LaurentPolynomial inverse() const;
  // Negative powers require an invertible base.
  LaurentPolynomial pow(int e) const;

  // p -> 1/p, q -> 1/q.
  LaurentPolynomial invert_vars() const;
  // p <-> q.
  LaurentPolynomial swap_vars() const;
  LaurentPolynomial at_p_one() const;  // p = 1
  LaurentPolynomial at_q_one() const;  // q = 1
  BigRational at_one() const;          // p = q = 1

  // e.g. "1/2*p^-1*q + 3". Zero prints as "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigRational& c);

  Terms terms_;
};

inline LaurentPolynomial invert_vars(const LaurentPolynomial& x) { return x.invert_vars(); }

}  // namespace altperm
