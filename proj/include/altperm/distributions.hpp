#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altperm/distribution_polynomial.hpp"
#include "altperm/permutation.hpp"
#include "altperm/series.hpp"

namespace altperm {

// Which pair of statistics a joint distribution tracks.
//   Maxima: p = mmp(0,1,0,0) / lrmax,  q = mmp(1,0,0,0) / rlmax
//   Minima: p = mmp(0,0,1,0) / lrmin,  q = mmp(0,0,0,1) / rlmin
enum class StatPair { Maxima, Minima };

// Generating functions of the joint MMP distributions:
// A on UD of even length, B on UD odd, C on DU even, D on DU odd.
enum class MmpVariant { A, B, C, D };

std::string to_string(MmpVariant v);
// Variants A and C (and single/maxmin variants 1 and 3) live on even lengths.
bool variant_is_even(int variant);
inline bool variant_is_even(MmpVariant v) { return v == MmpVariant::A || v == MmpVariant::C; }

// Index 1..4 of the closed form whose coefficients give the distribution of
// `kind` over the class at length n (rlmax on UD_even is variant 1, ...).
int single_variant_for(AltClass cls, int n, StatKind kind);
// Same for the joint distributions; variants 1..4 correspond to A..D and to G1..G4.
int joint_variant_for(AltClass cls, int n, StatPair pair);

DistributionPolynomial brute_single(int n, AltClass cls, StatKind kind, int threads = 1);
DistributionPolynomial brute_joint_mmp(int n, AltClass cls, StatPair pair = StatPair::Maxima, int threads = 1);
DistributionPolynomial brute_joint_maxmin(int n, AltClass cls, StatPair pair = StatPair::Maxima, int threads = 1);

// Closed forms for the distribution of rlmax, variants 1..4 (in q only).
LaurentSeries gf_single(int variant, int order);
LaurentSeries gf_joint_mmp(MmpVariant variant, int order);
// Closed forms for (lrmax, rlmax), variants 1..4.
LaurentSeries gf_joint_maxmin(int variant, int order);
// The same series obtained from gf_joint_mmp by p -> 1/p, q -> 1/q, t -> pq t.
LaurentSeries gf_joint_maxmin_via_subst(int variant, int order);

// n! [t^n] f as a polynomial, after the polynomiality checkpoint.
DistributionPolynomial extract_distribution(const LaurentSeries& f, int n, std::string_view what);

// Binomial convolution recurrences for A..D. Each length is computed once;
// the specializations at p = 1 and q = 1 are memoized alongside.
class JointMmpRecurrence {
 public:
  // With `a_left_factor` the C and D convolutions take A_{2k}(p,1) (for D:
  // p^{2k} A_{2k}(p,1)) as the left factor instead of C_{2k}(p,1) q^{2k}.
  // That form disagrees with enumeration; it is kept so a test can show it.
  explicit JointMmpRecurrence(bool a_left_factor = false) : a_left_factor_(a_left_factor) {}

  const DistributionPolynomial& get(MmpVariant v, int n);

 private:
  const DistributionPolynomial& at_p_one(MmpVariant v, int n);
  const DistributionPolynomial& at_q_one(MmpVariant v, int n);
  DistributionPolynomial compute(MmpVariant v, int n);

  bool a_left_factor_;
  std::map<std::pair<int, int>, DistributionPolynomial> full_;
  std::map<std::pair<int, int>, DistributionPolynomial> p_one_;
  std::map<std::pair<int, int>, DistributionPolynomial> q_one_;
};

// Throws DomainError when n has the wrong parity for the variant.
DistributionPolynomial rec_joint_mmp(MmpVariant v, int n);
DistributionPolynomial rec_joint_mmp_a_left_factor(MmpVariant v, int n);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Brute-force check of every equidistribution identity that applies at
// length n (single statistics, joint MMP pairs, joint maxima/minima pairs,
// and the p <-> q symmetry of the odd-length maxima/minima distributions).
std::vector<IdentityCheck> check_equidistribution(int n, int threads = 1);

}  // namespace altperm
