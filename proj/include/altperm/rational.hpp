#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace altperm {

using BigInt = mpz_class;
// mpq_class keeps the fraction canonical (reduced, positive denominator)
// after every arithmetic operation.
using BigRational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// Always "num/den", even for integers, so the form is unambiguous.
inline std::string to_string(const BigRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRational parse_rational(const std::string& text);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // 0 when k < 0 or k > n

// Row of binomial coefficients C(n, 0..n).
std::vector<BigInt> binomial_row(unsigned n);

}  // namespace altperm
