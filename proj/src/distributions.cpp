#include "altperm/distributions.hpp"

#include "altperm/errors.hpp"
#include "altperm/sweep.hpp"

namespace altperm {

std::string to_string(MmpVariant v) {
  switch (v) {
    case MmpVariant::A: return "A";
    case MmpVariant::B: return "B";
    case MmpVariant::C: return "C";
    case MmpVariant::D: return "D";
  }
  return "?";
}

bool variant_is_even(int variant) {
  if (variant < 1 || variant > 4) throw DomainError("variant must be 1..4");
  return variant % 2 == 1;
}

int single_variant_for(AltClass cls, int n, StatKind kind) {
  if (n < 1) throw DomainError("length must be at least 1");
  const bool ud = cls == AltClass::UpDown;
  if (n % 2 == 0) {
    switch (kind) {
      case StatKind::RlMax: return ud ? 1 : 3;
      case StatKind::LrMin: return ud ? 1 : 3;
      case StatKind::LrMax: return ud ? 3 : 1;
      case StatKind::RlMin: return ud ? 3 : 1;
    }
  } else {
    switch (kind) {
      case StatKind::RlMax: return ud ? 2 : 4;
      case StatKind::LrMax: return ud ? 2 : 4;
      case StatKind::RlMin: return ud ? 4 : 2;
      case StatKind::LrMin: return ud ? 4 : 2;
    }
  }
  throw DomainError("unknown statistic");
}

int joint_variant_for(AltClass cls, int n, StatPair pair) {
  if (n < 1) throw DomainError("length must be at least 1");
  const bool ud = cls == AltClass::UpDown;
  const bool primary = (pair == StatPair::Maxima) == ud;  // classes carrying A/B
  if (n % 2 == 0) return primary ? 1 : 3;
  return primary ? 2 : 4;
}

namespace {

MmpSpec pair_p_spec(StatPair pair) { return pair == StatPair::Maxima ? MmpSpec{0, 1, 0, 0} : MmpSpec{0, 0, 1, 0}; }
MmpSpec pair_q_spec(StatPair pair) { return pair == StatPair::Maxima ? MmpSpec{1, 0, 0, 0} : MmpSpec{0, 0, 0, 1}; }
StatKind pair_p_stat(StatPair pair) { return pair == StatPair::Maxima ? StatKind::LrMax : StatKind::LrMin; }
StatKind pair_q_stat(StatPair pair) { return pair == StatPair::Maxima ? StatKind::RlMax : StatKind::RlMin; }

void require_length(int n) {
  if (n < 1) throw DomainError("length must be at least 1");
}

}  // namespace

DistributionPolynomial brute_single(int n, AltClass cls, StatKind kind, int threads) {
  require_length(n);
  return sweep_alternating(n, cls, threads, CountGrid(n), [kind](CountGrid& g, std::span<const int> pi) {
           g.add(0, stat(pi, kind));
         })
      .to_polynomial();
}

DistributionPolynomial brute_joint_mmp(int n, AltClass cls, StatPair pair, int threads) {
  require_length(n);
  const MmpSpec ps = pair_p_spec(pair);
  const MmpSpec qs = pair_q_spec(pair);
  return sweep_alternating(n, cls, threads, CountGrid(n), [&](CountGrid& g, std::span<const int> pi) {
           g.add(mmp_count(pi, ps), mmp_count(pi, qs));
         })
      .to_polynomial();
}

DistributionPolynomial brute_joint_maxmin(int n, AltClass cls, StatPair pair, int threads) {
  require_length(n);
  const StatKind ps = pair_p_stat(pair);
  const StatKind qs = pair_q_stat(pair);
  return sweep_alternating(n, cls, threads, CountGrid(n), [&](CountGrid& g, std::span<const int> pi) {
           g.add(stat(pi, ps), stat(pi, qs));
         })
      .to_polynomial();
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

using LP = LaurentPolynomial;

LaurentSeries sec_of(const LP& scale, int order) {
  return substitute_scaled_var(lift(trig(TrigKind::Sec, order)), scale);
}

LaurentSeries one(int order) { return LaurentSeries::constant(1, order); }

LaurentSeries capped(const LaurentSeries& f, int order) { return f.order() > order ? f.truncated(order) : f; }

void require_order(int order) {
  if (order < 1) throw DomainError("series order must be at least 1");
}

}  // namespace

LaurentSeries gf_single(int variant, int order) {
  require_order(order);
  const LP q = LP::q();
  const LP q_inv = q.inverse();
  switch (variant) {
    case 1:
      return pow_exponent(sec_of(1, order), q);
    case 2: {
      auto inner = substitute_scaled_var(integrate(pow_exponent(sec_of(q_inv, order), -q)), q);
      return capped(pow_exponent(sec_of(1, order), q) * inner, order);
    }
    case 3: {
      // The inner exponent is -q: with +q the series is not sec t at q = 1.
      auto inner = integrate(pow_exponent(sec_of(q_inv, order), -q));
      auto outer = pow_exponent(sec_of(q_inv, order), 1 + q) * inner;
      return capped(one(order) + substitute_scaled_var(integrate(outer), q), order);
    }
    case 4:
      return capped(substitute_scaled_var(integrate(pow_exponent(sec_of(q_inv, order), 1 + q)), q), order);
    default:
      throw DomainError("single-statistic variant must be 1..4");
  }
}

LaurentSeries gf_joint_mmp(MmpVariant variant, int order) {
  require_order(order);
  const LP p = LP::p();
  const LP q = LP::q();
  const LP p_inv = p.inverse();
  const LP q_inv = q.inverse();
  // (sec(pq s))^{1/p + 1/q}
  const auto lead = pow_exponent(sec_of(p * q, order), p_inv + q_inv);
  // int_0^{qs} (sec(p z))^{-1/p} dz  and  int_0^{ps} (sec(q z))^{-1/q} dz
  auto inner_p = [&] { return substitute_scaled_var(integrate(pow_exponent(sec_of(p, order), -p_inv)), q); };
  auto inner_q = [&] { return substitute_scaled_var(integrate(pow_exponent(sec_of(q, order), -q_inv)), p); };
  switch (variant) {
    case MmpVariant::A:
      return capped(one(order) + integrate(lead * inner_p()), order);
    case MmpVariant::B:
      return capped(LaurentSeries::variable(order) + integrate(lead * inner_p() * inner_q()), order);
    case MmpVariant::C:
      return capped(one(order) + integrate(lead * inner_q()), order);
    case MmpVariant::D:
      return capped(integrate(lead), order);
  }
  throw DomainError("unknown MMP variant");
}

LaurentSeries gf_joint_maxmin(int variant, int order) {
  require_order(order);
  const LP p = LP::p();
  const LP q = LP::q();
  const LP pq = p * q;
  const LP p_inv = p.inverse();
  const LP q_inv = q.inverse();
  // (sec(s/pq))^{p+q}
  const auto lead = pow_exponent(sec_of(pq.inverse(), order), p + q);
  // int_0^{s/q} (sec(z/p))^{-p} dz  and  int_0^{s/p} (sec(z/q))^{-q} dz
  auto inner_p = [&] { return substitute_scaled_var(integrate(pow_exponent(sec_of(p_inv, order), -p)), q_inv); };
  auto inner_q = [&] { return substitute_scaled_var(integrate(pow_exponent(sec_of(q_inv, order), -q)), p_inv); };
  switch (variant) {
    case 1:
      return capped(one(order) + substitute_scaled_var(integrate(lead * inner_p()), pq), order);
    case 2:
      return capped(
          substitute_scaled_var(LaurentSeries::variable(order) + integrate(lead * inner_p() * inner_q()), pq),
          order);
    case 3:
      return capped(one(order) + substitute_scaled_var(integrate(lead * inner_q()), pq), order);
    case 4:
      return capped(substitute_scaled_var(integrate(lead), pq), order);
    default:
      throw DomainError("max/min variant must be 1..4");
  }
}

LaurentSeries gf_joint_maxmin_via_subst(int variant, int order) {
  if (variant < 1 || variant > 4) throw DomainError("max/min variant must be 1..4");
  const auto mmp = gf_joint_mmp(static_cast<MmpVariant>(variant - 1), order);
  return substitute_scaled_var(invert_vars(mmp), LP::p() * LP::q());
}

DistributionPolynomial extract_distribution(const LaurentSeries& f, int n, std::string_view what) {
  return DistributionPolynomial::from_laurent(egf_coefficient(f, n), what);
}

// ---------------------------------------------------------------------------
// Convolution recurrences

namespace {
int key(MmpVariant v) { return static_cast<int>(v); }
}  // namespace

const DistributionPolynomial& JointMmpRecurrence::get(MmpVariant v, int n) {
  const bool even = variant_is_even(v);
  if (n < 0 || (n % 2 == 0) != even)
    throw DomainError("variant " + to_string(v) + " is defined on " + (even ? "even" : "odd") + " lengths, got " +
                      std::to_string(n));
  auto k = std::make_pair(key(v), n);
  if (auto it = full_.find(k); it != full_.end()) return it->second;
  auto value = compute(v, n);
  return full_.emplace(k, std::move(value)).first->second;
}

const DistributionPolynomial& JointMmpRecurrence::at_p_one(MmpVariant v, int n) {
  auto k = std::make_pair(key(v), n);
  if (auto it = p_one_.find(k); it != p_one_.end()) return it->second;
  auto value = get(v, n).at_p_one();
  return p_one_.emplace(k, std::move(value)).first->second;
}

const DistributionPolynomial& JointMmpRecurrence::at_q_one(MmpVariant v, int n) {
  auto k = std::make_pair(key(v), n);
  if (auto it = q_one_.find(k); it != q_one_.end()) return it->second;
  auto value = get(v, n).at_q_one();
  return q_one_.emplace(k, std::move(value)).first->second;
}

// Splitting at the position of the maximum: the left block contributes one q
// per element (each sees the maximum in quadrant I) and the right block one p
// per element (quadrant II).
DistributionPolynomial JointMmpRecurrence::compute(MmpVariant v, int n) {
  using enum MmpVariant;
  DistributionPolynomial r;
  switch (v) {
    case A: {
      if (n == 0) {
        r.add(0, 0, 1);
        return r;
      }
      // max at position 2k; left in UD_{2k-1}, right in UD_{n-2k}
      for (int k = 1; 2 * k <= n; ++k) {
        const int left = 2 * k - 1;
        const int right = n - 2 * k;
        r += at_q_one(B, left).shifted(0, left) * at_p_one(A, right).shifted(right, 0, binomial(n - 1, left));
      }
      return r;
    }
    case B: {
      if (n == 1) {
        r.add(0, 0, 1);
        return r;
      }
      for (int k = 1; 2 * k < n; ++k) {
        const int left = 2 * k - 1;
        const int right = n - 2 * k;
        r += at_q_one(B, left).shifted(0, left) * at_p_one(B, right).shifted(right, 0, binomial(n - 1, left));
      }
      return r;
    }
    case C: {
      if (n == 0) {
        r.add(0, 0, 1);
        return r;
      }
      // max at position 2k+1; left in DU_{2k}, right in UD_{n-2k-1}
      for (int k = 0; 2 * k + 1 <= n; ++k) {
        const int left = 2 * k;
        const int right = n - 2 * k - 1;
        const auto& left_part = a_left_factor_ ? at_q_one(A, left) : at_q_one(C, left);
        r += left_part.shifted(0, left) * at_p_one(B, right).shifted(right, 0, binomial(n - 1, left));
      }
      return r;
    }
    case D: {
      // max at position 2k+1; left in DU_{2k}, right in UD_{n-2k-1}
      for (int k = 0; 2 * k + 1 <= n; ++k) {
        const int left = 2 * k;
        const int right = n - 2 * k - 1;
        const auto left_part =
            a_left_factor_ ? at_q_one(A, left).shifted(left, 0) : at_q_one(C, left).shifted(0, left);
        r += left_part * at_p_one(A, right).shifted(right, 0, binomial(n - 1, left));
      }
      return r;
    }
  }
  throw DomainError("unknown MMP variant");
}

DistributionPolynomial rec_joint_mmp(MmpVariant v, int n) {
  JointMmpRecurrence rec;
  return rec.get(v, n);
}

DistributionPolynomial rec_joint_mmp_a_left_factor(MmpVariant v, int n) {
  JointMmpRecurrence rec(true);
  return rec.get(v, n);
}

// ---------------------------------------------------------------------------
// Equidistribution report

namespace {

struct AllStats {
  explicit AllStats(int n)
      : single{CountGrid(n), CountGrid(n), CountGrid(n), CountGrid(n)},
        mmp_max(n),
        mmp_min(n),
        ext_max(n),
        ext_min(n) {}

  CountGrid single[4];  // indexed by StatKind
  CountGrid mmp_max, mmp_min, ext_max, ext_min;

  AllStats& operator+=(const AllStats& o) {
    for (int i = 0; i < 4; ++i) single[i] += o.single[i];
    mmp_max += o.mmp_max;
    mmp_min += o.mmp_min;
    ext_max += o.ext_max;
    ext_min += o.ext_min;
    return *this;
  }
};

struct ClassStats {
  DistributionPolynomial single[4];
  DistributionPolynomial mmp_max, mmp_min, ext_max, ext_min;
};

ClassStats collect(int n, AltClass cls, int threads) {
  AllStats acc = sweep_alternating(n, cls, threads, AllStats(n), [](AllStats& a, std::span<const int> pi) {
    int s[4];
    for (int k = 0; k < 4; ++k) {
      s[k] = stat(pi, static_cast<StatKind>(k));
      a.single[k].add(0, s[k]);
    }
    a.mmp_max.add(mmp_count(pi, {0, 1, 0, 0}), mmp_count(pi, {1, 0, 0, 0}));
    a.mmp_min.add(mmp_count(pi, {0, 0, 1, 0}), mmp_count(pi, {0, 0, 0, 1}));
    a.ext_max.add(s[static_cast<int>(StatKind::LrMax)], s[static_cast<int>(StatKind::RlMax)]);
    a.ext_min.add(s[static_cast<int>(StatKind::LrMin)], s[static_cast<int>(StatKind::RlMin)]);
  });
  ClassStats out;
  for (int k = 0; k < 4; ++k) out.single[k] = acc.single[k].to_polynomial();
  out.mmp_max = acc.mmp_max.to_polynomial();
  out.mmp_min = acc.mmp_min.to_polynomial();
  out.ext_max = acc.ext_max.to_polynomial();
  out.ext_min = acc.ext_min.to_polynomial();
  return out;
}

struct Term {
  std::string label;
  DistributionPolynomial value;
};

void add_family(std::vector<IdentityCheck>& out, const std::string& family, const std::vector<Term>& terms) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    IdentityCheck c;
    c.name = family + ": " + terms[0].label + " = " + terms[i].label;
    c.passed = terms[0].value == terms[i].value;
    c.detail = terms[0].value.to_string() + (c.passed ? " == " : " != ") + terms[i].value.to_string();
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<IdentityCheck> check_equidistribution(int n, int threads) {
  require_length(n);
  const ClassStats ud = collect(n, AltClass::UpDown, threads);
  const ClassStats du = collect(n, AltClass::DownUp, threads);
  const std::string len = "[" + std::to_string(n) + "]";
  auto single = [&](const ClassStats& cs, StatKind k, const char* cls) {
    return Term{std::string(cls) + " " + to_string(k), cs.single[static_cast<int>(k)]};
  };
  using enum StatKind;
  std::vector<IdentityCheck> out;
  // Each family lists the representations of one generating function. Joint
  // entries marked "swapped" exchange the roles of p and q.
  struct JointSel {
    const ClassStats* cs;
    bool maxima;
    bool swapped;
    const char* label;
  };
  auto joint_family = [&](const std::string& name, bool mmp, std::initializer_list<JointSel> sel) {
    std::vector<Term> terms;
    for (const auto& s : sel) {
      const auto& base = mmp ? (s.maxima ? s.cs->mmp_max : s.cs->mmp_min) : (s.maxima ? s.cs->ext_max : s.cs->ext_min);
      terms.push_back({s.label, s.swapped ? base.swap_vars() : base});
    }
    add_family(out, name + len, terms);
  };

  if (n % 2 == 0) {
    add_family(out, "F1" + len,
               {single(ud, RlMax, "UD"), single(du, LrMax, "DU"), single(du, RlMin, "DU"), single(ud, LrMin, "UD")});
    add_family(out, "F3" + len,
               {single(du, RlMax, "DU"), single(ud, LrMax, "UD"), single(ud, RlMin, "UD"), single(du, LrMin, "DU")});
    joint_family("A", true,
                 {{&ud, true, false, "UD (mmp0100,mmp1000)"},
                  {&du, true, true, "DU (mmp1000,mmp0100)"},
                  {&du, false, false, "DU (mmp0010,mmp0001)"},
                  {&ud, false, true, "UD (mmp0001,mmp0010)"}});
    joint_family("C", true,
                 {{&du, true, false, "DU (mmp0100,mmp1000)"},
                  {&ud, true, true, "UD (mmp1000,mmp0100)"},
                  {&ud, false, false, "UD (mmp0010,mmp0001)"},
                  {&du, false, true, "DU (mmp0001,mmp0010)"}});
    joint_family("G1", false,
                 {{&ud, true, false, "UD (lrmax,rlmax)"},
                  {&du, true, true, "DU (rlmax,lrmax)"},
                  {&du, false, false, "DU (lrmin,rlmin)"},
                  {&ud, false, true, "UD (rlmin,lrmin)"}});
    joint_family("G3", false,
                 {{&du, true, false, "DU (lrmax,rlmax)"},
                  {&ud, true, true, "UD (rlmax,lrmax)"},
                  {&ud, false, false, "UD (lrmin,rlmin)"},
                  {&du, false, true, "DU (rlmin,lrmin)"}});
  } else {
    add_family(out, "F2" + len,
               {single(ud, RlMax, "UD"), single(ud, LrMax, "UD"), single(du, RlMin, "DU"), single(du, LrMin, "DU")});
    add_family(out, "F4" + len,
               {single(du, RlMax, "DU"), single(du, LrMax, "DU"), single(ud, RlMin, "UD"), single(ud, LrMin, "UD")});
    joint_family("B", true,
                 {{&ud, true, false, "UD (mmp0100,mmp1000)"},
                  {&ud, true, true, "UD (mmp1000,mmp0100)"},
                  {&du, false, false, "DU (mmp0010,mmp0001)"},
                  {&du, false, true, "DU (mmp0001,mmp0010)"}});
    joint_family("D", true,
                 {{&du, true, false, "DU (mmp0100,mmp1000)"},
                  {&du, true, true, "DU (mmp1000,mmp0100)"},
                  {&ud, false, false, "UD (mmp0010,mmp0001)"},
                  {&ud, false, true, "UD (mmp0001,mmp0010)"}});
    joint_family("G2", false,
                 {{&ud, true, false, "UD (lrmax,rlmax)"},
                  {&ud, true, true, "UD (rlmax,lrmax)"},
                  {&du, false, false, "DU (lrmin,rlmin)"},
                  {&du, false, true, "DU (rlmin,lrmin)"}});
    joint_family("G4", false,
                 {{&du, true, false, "DU (lrmax,rlmax)"},
                  {&du, true, true, "DU (rlmax,lrmax)"},
                  {&ud, false, false, "UD (lrmin,rlmin)"},
                  {&ud, false, true, "UD (rlmin,lrmin)"}});
    // p <-> q symmetry
    add_family(out, "G2 symmetry" + len, {{"G2(p,q)", ud.ext_max}, {"G2(q,p)", ud.ext_max.swap_vars()}});
    add_family(out, "G4 symmetry" + len, {{"G4(p,q)", du.ext_max}, {"G4(q,p)", du.ext_max.swap_vars()}});
  }
  return out;
}

}  // namespace altperm
