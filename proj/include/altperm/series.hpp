#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "altperm/errors.hpp"
#include "altperm/laurent.hpp"
#include "altperm/rational.hpp"

namespace altperm {

// Highest power of t that integrate() will grow a series to. Defaults to 14
// (permutation lengths up to 13 plus one); ALTPERM_MAX_ORDER overrides it.
int series_max_order();
inline constexpr int kDefaultMaxOrder = 14;

template <class Ring>
struct RingTraits;

template <>
struct RingTraits<BigRational> {
  static BigRational one() { return 1; }
  static bool is_zero(const BigRational& x) { return x == 0; }
  static bool is_one(const BigRational& x) { return x == 1; }
  static bool is_invertible(const BigRational& x) { return x != 0; }
  static BigRational inverse(const BigRational& x) {
    if (x == 0) throw DomainError("division by zero rational");
    return 1 / x;
  }
  static bool is_scaling_supported(const BigRational&) { return true; }
  static BigRational pow(const BigRational& x, int e) {
    BigRational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  }
  static std::string to_string(const BigRational& x) { return altperm::to_string(x); }
};

template <>
struct RingTraits<LaurentPolynomial> {
  static LaurentPolynomial one() { return 1; }
  static bool is_zero(const LaurentPolynomial& x) { return x.is_zero(); }
  static bool is_one(const LaurentPolynomial& x) {
    return x.is_monomial() && x.constant_term() == 1;
  }
  static bool is_invertible(const LaurentPolynomial& x) { return x.is_invertible(); }
  static LaurentPolynomial inverse(const LaurentPolynomial& x) { return x.inverse(); }
  static bool is_scaling_supported(const LaurentPolynomial& x) { return x.is_monomial(); }
  static LaurentPolynomial pow(const LaurentPolynomial& x, int e) { return x.pow(e); }
  static std::string to_string(const LaurentPolynomial& x) { return x.to_string(); }
};

// Power series in t known exactly through t^order. Coefficients are dense.
template <class Ring>
class TruncatedSeries {
 public:
  using Traits = RingTraits<Ring>;

  explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}
  TruncatedSeries(int order, std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(order);
    if (coeffs_.size() > static_cast<std::size_t>(order) + 1)
      throw UnsupportedInput("more coefficients than the truncation order allows");
    coeffs_.resize(order + 1);
  }

  static TruncatedSeries constant(const Ring& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  // The series t itself.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Traits::one();
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Ring& operator[](int n) const {
    if (n < 0 || n > order())
      throw RangeError("coefficient t^" + std::to_string(n) + " beyond order " + std::to_string(order()));
    return coeffs_[n];
  }
  const std::vector<Ring>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries truncated(int order) const {
    if (order > this->order())
      throw RangeError("cannot extend a series of order " + std::to_string(this->order()) + " to " +
                       std::to_string(order));
    return TruncatedSeries(order, std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator*=(const Ring& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Ring& c) { return a *= c; }
  friend TruncatedSeries operator*(const Ring& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncatedSeries r(order);
    for (int i = 0; i <= order; ++i) {
      if (Traits::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= order; ++j) {
        if (Traits::is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r.coeffs_[n] = -coeffs_[n];
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return order;
  }
  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(order + 1);
  }

  std::vector<Ring> coeffs_;
};

using RationalSeries = TruncatedSeries<BigRational>;
using LaurentSeries = TruncatedSeries<LaurentPolynomial>;

template <class Ring>
TruncatedSeries<Ring> add(const TruncatedSeries<Ring>& f, const TruncatedSeries<Ring>& g) { return f + g; }
template <class Ring>
TruncatedSeries<Ring> sub(const TruncatedSeries<Ring>& f, const TruncatedSeries<Ring>& g) { return f - g; }
template <class Ring>
TruncatedSeries<Ring> mul(const TruncatedSeries<Ring>& f, const TruncatedSeries<Ring>& g) { return f * g; }

template <class Ring>
TruncatedSeries<Ring> reciprocal(const TruncatedSeries<Ring>& f) {
  using T = RingTraits<Ring>;
  if (!T::is_invertible(f[0]))
    throw DomainError("reciprocal: constant term " + T::to_string(f[0]) + " is not invertible");
  const int order = f.order();
  std::vector<Ring> g(order + 1);
  g[0] = T::inverse(f[0]);
  const Ring neg_inv = -g[0];
  for (int n = 1; n <= order; ++n) {
    Ring acc;
    for (int k = 1; k <= n; ++k)
      if (!T::is_zero(f[k]) && !T::is_zero(g[n - k])) acc += f[k] * g[n - k];
    g[n] = acc * neg_inv;
  }
  return TruncatedSeries<Ring>(order, std::move(g));
}

template <class Ring>
TruncatedSeries<Ring> derivative(const TruncatedSeries<Ring>& f) {
  if (f.order() == 0) throw DomainError("derivative of an order-0 series carries no information");
  std::vector<Ring> g(f.order());
  for (int n = 0; n < f.order(); ++n) g[n] = f[n + 1] * BigRational(n + 1);
  return TruncatedSeries<Ring>(f.order() - 1, std::move(g));
}

// Antiderivative with zero constant term. Knowing f through t^N fixes the
// integral through t^(N+1); the result is capped at series_max_order() unless
// f already exceeds it.
template <class Ring>
TruncatedSeries<Ring> integrate(const TruncatedSeries<Ring>& f) {
  const int order = std::min(f.order() + 1, std::max(series_max_order(), f.order()));
  std::vector<Ring> g(order + 1);
  for (int n = 1; n <= order; ++n) g[n] = f[n - 1] * BigRational(1, n);
  return TruncatedSeries<Ring>(order, std::move(g));
}

// f(c*t): the t^n coefficient is multiplied by c^n. Laurent scalings must be
// single monomials.
template <class Ring>
TruncatedSeries<Ring> substitute_scaled_var(const TruncatedSeries<Ring>& f, const Ring& c) {
  using T = RingTraits<Ring>;
  if (!T::is_scaling_supported(c))
    throw UnsupportedInput("substitute_scaled_var: scaling " + T::to_string(c) + " is not a monomial");
  std::vector<Ring> g(f.order() + 1);
  Ring power = T::one();
  for (int n = 0; n <= f.order(); ++n) {
    g[n] = f[n] * power;
    power *= c;
  }
  return TruncatedSeries<Ring>(f.order(), std::move(g));
}

template <class Ring>
TruncatedSeries<Ring> exp(const TruncatedSeries<Ring>& f) {
  using T = RingTraits<Ring>;
  if (!T::is_zero(f[0])) throw DomainError("exp: constant term must be 0, got " + T::to_string(f[0]));
  const int order = f.order();
  std::vector<Ring> g(order + 1);
  g[0] = T::one();
  // n g_n = sum_{k=1}^n k f_k g_{n-k}
  for (int n = 1; n <= order; ++n) {
    Ring acc;
    for (int k = 1; k <= n; ++k)
      if (!T::is_zero(f[k]) && !T::is_zero(g[n - k])) acc += (f[k] * g[n - k]) * BigRational(k);
    g[n] = acc * BigRational(1, n);
  }
  return TruncatedSeries<Ring>(order, std::move(g));
}

template <class Ring>
TruncatedSeries<Ring> log(const TruncatedSeries<Ring>& f) {
  using T = RingTraits<Ring>;
  if (!T::is_one(f[0])) throw DomainError("log: constant term must be 1, got " + T::to_string(f[0]));
  const int order = f.order();
  std::vector<Ring> g(order + 1);
  // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
  for (int n = 1; n <= order; ++n) {
    Ring acc = f[n] * BigRational(n);
    for (int k = 1; k < n; ++k)
      if (!T::is_zero(g[k]) && !T::is_zero(f[n - k])) acc -= (g[k] * f[n - k]) * BigRational(k);
    g[n] = acc * BigRational(1, n);
  }
  return TruncatedSeries<Ring>(order, std::move(g));
}

// f^e = exp(e log f), defined for f(0) = 1 only.
template <class Ring>
TruncatedSeries<Ring> pow_exponent(const TruncatedSeries<Ring>& f, const Ring& e) {
  using T = RingTraits<Ring>;
  if (!T::is_one(f[0])) throw DomainError("pow_exponent: constant term must be 1, got " + T::to_string(f[0]));
  return exp(log(f) * e);
}

// n! [t^n] f
template <class Ring>
Ring egf_coefficient(const TruncatedSeries<Ring>& f, int n) {
  if (n < 0 || n > f.order())
    throw RangeError("egf_coefficient: index " + std::to_string(n) + " beyond order " + std::to_string(f.order()));
  return f[n] * BigRational(factorial(static_cast<unsigned>(n)));
}

LaurentSeries invert_vars(const LaurentSeries& f);
LaurentSeries lift(const RationalSeries& f);

enum class TrigKind { Sin, Cos, Sec, Tan };

RationalSeries trig(TrigKind kind, int order);

}  // namespace altperm
