#include "altperm/springer.hpp"

#include "altperm/errors.hpp"
#include "altperm/permutation.hpp"

namespace altperm {

namespace {

void require_index(int n) {
  if (n < 0) throw DomainError("index must be nonnegative");
}

void require_order(int order) {
  if (order < 1) throw DomainError("series order must be at least 1");
}

BigInt integral_egf(const RationalSeries& f, int n, const char* what) {
  const BigRational c = egf_coefficient(f, n);
  if (c.get_den() != 1) throw InternalError(std::string(what) + ": non-integer EGF coefficient");
  return c.get_num();
}

using LP = LaurentPolynomial;

LaurentSeries sec_plus_tan(const LP& scale, int order) {
  return substitute_scaled_var(lift(trig(TrigKind::Sec, order) + trig(TrigKind::Tan, order)), scale);
}

LaurentSeries cos_minus_sin(const LP& scale, int order) {
  return substitute_scaled_var(lift(trig(TrigKind::Cos, order) - trig(TrigKind::Sin, order)), scale);
}

// int_0^t E(2 a z) / (cos bz - sin bz) dz, checked for nonnegative integral
// EGF coefficients.
LaurentSeries springer_analogue(const LP& lle_scale, const LP& be_scale, int order) {
  auto f = integrate(sec_plus_tan(LP(2) * lle_scale, order) * reciprocal(cos_minus_sin(be_scale, order)));
  if (f.order() > order) f = f.truncated(order);
  for (int n = 0; n <= f.order(); ++n) DistributionPolynomial::from_laurent(egf_coefficient(f, n), "q-Springer series");
  return f;
}

}  // namespace

SequenceTable euler_numbers(int max_index) {
  require_index(max_index);
  SequenceTable e(max_index + 1);
  e[0] = 1;
  if (max_index >= 1) e[1] = 1;
  // E_{n+1} = 1/2 sum_k C(n,k) E_{n-k} E_k for n >= 1
  for (int n = 1; n + 1 <= max_index; ++n) {
    BigInt s = 0;
    for (int k = 0; k <= n; ++k) s += binomial(n, k) * e[n - k] * e[k];
    if (s % 2 != 0) throw InternalError("Euler recurrence produced an odd sum");
    e[n + 1] = s / 2;
  }
  const int check_to = std::min(max_index, series_max_order());
  const auto series = trig(TrigKind::Sec, check_to) + trig(TrigKind::Tan, check_to);
  for (int n = 0; n <= check_to; ++n)
    if (integral_egf(series, n, "sec+tan") != e[n])
      throw InternalError("Euler number E_" + std::to_string(n) + " disagrees with sec t + tan t");
  return e;
}

SequenceTable springer_numbers(int max_index) {
  require_index(max_index);
  const auto series = reciprocal(trig(TrigKind::Cos, max_index) - trig(TrigKind::Sin, max_index));
  SequenceTable s(max_index + 1);
  for (int n = 0; n <= max_index; ++n) s[n] = integral_egf(series, n, "1/(cos-sin)");
  return s;
}

SequenceTable rc_count_recurrence(int max_index) {
  require_index(max_index);
  const SequenceTable e = euler_numbers(max_index);
  SequenceTable b(max_index + 1);
  b[0] = 1;
  for (int n = 1; n <= max_index; ++n) {
    BigInt s = 0;
    BigInt two_k = 1;
    for (int k = 0; k <= n - 1; ++k) {
      s += two_k * binomial(n - 1, k) * e[k] * b[n - k - 1];
      two_k *= 2;
    }
    b[n] = s;
  }
  return b;
}

BigInt brute_rc_count(int half_n) {
  require_index(half_n);
  unsigned long count = 0;
  for_each_rc_fixed(2 * half_n, [&](std::span<const int>) { ++count; });
  return BigInt(count);
}

LaurentSeries gf_Q(int order) {
  require_order(order);
  return springer_analogue(LP::q(), 1, order);
}

LaurentSeries gf_U(int order) {
  require_order(order);
  return springer_analogue(1, LP::p(), order);
}

LaurentSeries gf_W(int order) {
  require_order(order);
  return springer_analogue(LP::q(), LP::p(), order);
}

DistributionPolynomial brute_lle_be(int length) {
  if (length < 2 || length % 2 != 0) throw DomainError("brute_lle_be needs an even length >= 2");
  CountGrid grid(length);
  for_each_rc_fixed(length, [&](std::span<const int> pi) {
    const auto s = extreme_stats(pi);
    grid.add(s.be, s.lle);
  });
  return grid.to_polynomial();
}

LaurentSeries q_springer_series(int which, int order) {
  require_order(order);
  const LP q = LP::q();
  const auto sin = lift(trig(TrigKind::Sin, order));
  const auto cos = lift(trig(TrigKind::Cos, order));
  switch (which) {
    case 1: return reciprocal(cos - sin * q);
    case 2: return reciprocal(cos - substitute_scaled_var(sin, q));
    case 3: return reciprocal(substitute_scaled_var(cos, q) - sin);
    case 4: return pow_exponent(cos - sin, -q);
    default: throw DomainError("q-Springer series index must be 1..4");
  }
}

}  // namespace altperm
