#include "altperm/distribution_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "altperm/errors.hpp"

namespace altperm {

void DistributionPolynomial::add(int ep, int eq, const BigInt& c) {
  if (ep < 0 || eq < 0) throw DomainError("distribution polynomial exponents must be nonnegative");
  if (c < 0) throw DomainError("distribution polynomial coefficients must be nonnegative");
  if (c == 0) return;
  terms_[Monomial{ep, eq}] += c;
}

DistributionPolynomial DistributionPolynomial::from_laurent(const LaurentPolynomial& x, std::string_view what) {
  DistributionPolynomial r;
  for (const auto& [m, c] : x.terms()) {
    if (m.p < 0 || m.q < 0)
      throw InternalError(std::string(what) + ": negative exponent survives in " + x.to_string());
    if (c.get_den() != 1 || c < 0)
      throw InternalError(std::string(what) + ": coefficient is not a nonnegative integer in " + x.to_string());
    r.terms_.emplace(m, c.get_num());
  }
  return r;
}

LaurentPolynomial DistributionPolynomial::to_laurent() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) r += LaurentPolynomial::monomial(BigRational(c), m.p, m.q);
  return r;
}

BigInt DistributionPolynomial::coefficient(int ep, int eq) const {
  auto it = terms_.find(Monomial{ep, eq});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt DistributionPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

DistributionPolynomial DistributionPolynomial::at_p_one() const {
  DistributionPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_[Monomial{0, m.q}] += c;
  return r;
}

DistributionPolynomial DistributionPolynomial::at_q_one() const {
  DistributionPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_[Monomial{m.p, 0}] += c;
  return r;
}

DistributionPolynomial DistributionPolynomial::swap_vars() const {
  DistributionPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.q, m.p}, c);
  return r;
}

int DistributionPolynomial::max_p_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.p);
  return d;
}

int DistributionPolynomial::max_q_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.q);
  return d;
}

DistributionPolynomial& DistributionPolynomial::operator+=(const DistributionPolynomial& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  return *this;
}

DistributionPolynomial operator*(const DistributionPolynomial& a, const DistributionPolynomial& b) {
  DistributionPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.terms_[Monomial{ma.p + mb.p, ma.q + mb.q}] += ca * cb;
  return r;
}

DistributionPolynomial DistributionPolynomial::shifted(int ep, int eq, const BigInt& c) const {
  DistributionPolynomial r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.add(m.p + ep, m.q + eq, v * c);
  return r;
}

std::string DistributionPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // ascending total degree reads more naturally than the storage order
  std::vector<std::pair<Monomial, BigInt>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return x.first.p + x.first.q < y.first.p + y.first.q;
  });
  for (const auto& [m, c] : sorted) {
    if (!first) os << " + ";
    first = false;
    const bool bare = m.p == 0 && m.q == 0;
    if (c != 1 || bare) os << c.get_str();
    if (m.p > 0) os << 'p' << (m.p > 1 ? "^" + std::to_string(m.p) : "");
    if (m.q > 0) os << 'q' << (m.q > 1 ? "^" + std::to_string(m.q) : "");
  }
  return os.str();
}

CountGrid& CountGrid::operator+=(const CountGrid& o) {
  if (o.dim_ != dim_) throw InternalError("CountGrid dimension mismatch");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
  return *this;
}

DistributionPolynomial CountGrid::to_polynomial() const {
  DistributionPolynomial r;
  for (int ep = 0; ep < dim_; ++ep)
    for (int eq = 0; eq < dim_; ++eq) {
      const std::uint64_t c = cells_[static_cast<std::size_t>(ep) * dim_ + eq];
      if (c != 0) r.add(ep, eq, BigInt(std::to_string(c)));
    }
  return r;
}

void require_agreement(std::string_view what, const DistributionPolynomial& lhs, const DistributionPolynomial& rhs) {
  if (lhs == rhs) return;
  const LaurentPolynomial diff = lhs.to_laurent() - rhs.to_laurent();
  throw VerificationError(std::string(what), lhs.to_string(), rhs.to_string(), diff.to_string());
}

}  // namespace altperm
