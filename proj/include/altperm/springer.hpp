#pragma once

#include <vector>

#include "altperm/distribution_polynomial.hpp"
#include "altperm/rational.hpp"
#include "altperm/series.hpp"

namespace altperm {

// Values indexed from 0.
using SequenceTable = std::vector<BigInt>;

// E_0..E_N by the binomial convolution recurrence, cross-checked against the
// EGF coefficients of sec t + tan t (InternalError on mismatch).
SequenceTable euler_numbers(int max_index);

// Springer numbers S_0..S_N from the EGF 1/(cos t - sin t).
SequenceTable springer_numbers(int max_index);
// b_0..b_N from b_n = sum_k 2^k C(n-1,k) E_k b_{n-k-1}, b_0 = 1; b_n counts
// rc-fixed up-down permutations of length 2n.
SequenceTable rc_count_recurrence(int max_index);
// |rc-fixed UD_{2 half_n}| by enumeration.
BigInt brute_rc_count(int half_n);

// q marks lle, p marks be; the t^n coefficient (times n!) is the distribution
// over rc-fixed up-down permutations of length 2n. No constant term.
LaurentSeries gf_Q(int order);
LaurentSeries gf_U(int order);
LaurentSeries gf_W(int order);

// sum of p^be q^lle over rc-fixed up-down permutations of the given (even) length.
DistributionPolynomial brute_lle_be(int length);

// The four q-deformations of 1/(cos t - sin t):
//   1: 1/(cos t - q sin t)      2: 1/(cos t - sin qt)
//   3: 1/(cos qt - sin t)       4: (cos t - sin t)^(-q)
LaurentSeries q_springer_series(int which, int order);

}  // namespace altperm
