#include "altperm/series.hpp"

#include <cstdlib>
#include <string>

namespace altperm {

int series_max_order() {
  static const int cap = [] {
    const char* env = std::getenv("ALTPERM_MAX_ORDER");
    if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
    try {
      int v = std::stoi(env);
      return v >= 0 ? v : kDefaultMaxOrder;
    } catch (const std::exception&) {
      return kDefaultMaxOrder;
    }
  }();
  return cap;
}

LaurentSeries invert_vars(const LaurentSeries& f) {
  std::vector<LaurentPolynomial> g;
  g.reserve(f.order() + 1);
  for (const auto& c : f.coefficients()) g.push_back(c.invert_vars());
  return LaurentSeries(f.order(), std::move(g));
}

LaurentSeries lift(const RationalSeries& f) {
  std::vector<LaurentPolynomial> g;
  g.reserve(f.order() + 1);
  for (const auto& c : f.coefficients()) g.emplace_back(c);
  return LaurentSeries(f.order(), std::move(g));
}

namespace {

RationalSeries sin_or_cos(int order, int parity) {
  std::vector<BigRational> c(order + 1);
  for (int n = parity; n <= order; n += 2) {
    BigRational v(1, 1);
    v /= BigRational(factorial(static_cast<unsigned>(n)));
    c[n] = ((n / 2) % 2 == 0) ? v : BigRational(-v);
  }
  return RationalSeries(order, std::move(c));
}

}  // namespace

RationalSeries trig(TrigKind kind, int order) {
  switch (kind) {
    case TrigKind::Sin:
      return sin_or_cos(order, 1);
    case TrigKind::Cos:
      return sin_or_cos(order, 0);
    case TrigKind::Sec:
      return reciprocal(sin_or_cos(order, 0));
    case TrigKind::Tan:
      return sin_or_cos(order, 1) * reciprocal(sin_or_cos(order, 0));
  }
  throw UnsupportedInput("unknown trig kind");
}

}  // namespace altperm
