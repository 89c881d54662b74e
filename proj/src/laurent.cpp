#include "altperm/laurent.hpp"

#include <sstream>

#include "altperm/errors.hpp"

namespace altperm {

LaurentPolynomial::LaurentPolynomial(const BigRational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const BigRational& c, int ep, int eq) {
  LaurentPolynomial r;
  if (c != 0) r.terms_.emplace(Monomial{ep, eq}, c);
  return r;
}

BigRational LaurentPolynomial::coefficient(int ep, int eq) const {
  auto it = terms_.find(Monomial{ep, eq});
  return it == terms_.end() ? BigRational(0) : it->second;
}

bool LaurentPolynomial::has_negative_exponent() const {
  for (const auto& [m, c] : terms_)
    if (m.p < 0 || m.q < 0) return true;
  return false;
}

void LaurentPolynomial::add_term(const Monomial& m, const BigRational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  BigRational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(Monomial{ma.p + mb.p, ma.q + mb.q}, prod);
    }
  }
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

LaurentPolynomial LaurentPolynomial::inverse() const {
  if (!is_invertible())
    throw DomainError("Laurent polynomial " + to_string() + " is not a unit (needs exactly one term)");
  const auto& [m, c] = *terms_.begin();
  return monomial(1 / c, -m.p, -m.q);
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::invert_vars() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{-m.p, -m.q}, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::swap_vars() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.q, m.p}, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::at_p_one() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{0, m.q}, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::at_q_one() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{m.p, 0}, c);
  return r;
}

BigRational LaurentPolynomial::at_one() const {
  BigRational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

namespace {
void append_power(std::ostringstream& os, char var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  first_factor = false;
}
}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    BigRational mag = abs(c);
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool first_factor = true;
    if (mag != 1 || (m.p == 0 && m.q == 0)) {
      os << mag.get_str();
      first_factor = false;
    }
    append_power(os, 'p', m.p, first_factor);
    append_power(os, 'q', m.q, first_factor);
  }
  return os.str();
}

}  // namespace altperm
