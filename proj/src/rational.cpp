#include "altperm/rational.hpp"

#include "altperm/errors.hpp"

namespace altperm {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw UnsupportedInput("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  for (unsigned k = 0; k <= n; ++k) row[k] = binomial(n, k);
  return row;
}

}  // namespace altperm
