#pragma once

#include <span>
#include <vector>

#include "altperm/permutation.hpp"
#include "altperm/pop.hpp"
#include "altperm/rational.hpp"

namespace altperm {

// a(n): Lambda_k-avoiding up-down permutations; b(n): down-up ones.
enum class AvoidanceShape { A, B };

// Inclusion-exclusion recurrences in n for Lambda_k avoidance (k >= 3).
// Lengths below k are the Euler numbers; terms with negative index vanish.
class FlatPopRecurrence {
 public:
  explicit FlatPopRecurrence(int k);

  int k() const noexcept { return k_; }
  const BigInt& a(int n) { return value(AvoidanceShape::A, n); }
  const BigInt& b(int n) { return value(AvoidanceShape::B, n); }
  const BigInt& value(AvoidanceShape shape, int n);

 private:
  void extend_to(int n);
  BigInt at(const std::vector<BigInt>& seq, int n) const { return n < 0 ? BigInt(0) : seq[n]; }

  int k_;
  std::vector<BigInt> a_;
  std::vector<BigInt> b_;
};

BigInt flat_pop_count_rec(int k, int n, AvoidanceShape shape);

// Which of a(n), b(n) counts avoiders of `variant` in the class: the variant
// is the image of Lambda_k under reverse (top_first), complement (vee) or
// reverse-complement (bottom_first).
AvoidanceShape pop_table_shape(FlatPopVariant variant, AltClass cls, int n);
SymmetryOp flat_pop_symmetry(FlatPopVariant variant);  // Lambda_k maps to variant under this op
BigInt pop_table_lookup(FlatPopVariant variant, int k, AltClass cls, int n);

// O(n^2) occurrence test for the flat shapes: a single extreme element with at
// least k-1 suitable entries on the correct side.
bool contains_flat_pop(std::span<const int> pi, FlatPopVariant variant, int k);

// Enumerate the class and count permutations with no occurrence.
BigInt brute_pop_avoiding(int n, AltClass cls, const Pop& pop);
BigInt brute_flat_pop_avoiding(int n, AltClass cls, FlatPopVariant variant, int k);

// Row n of P(n, l): number of n-permutations with exactly l occurrences of
// Lambda_k, l = 0..(last nonzero).
struct OccurrenceTable {
  int n = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
  BigInt at(std::size_t l) const { return l < counts.size() ? counts[l] : BigInt(0); }
};

// Insertion recurrence: placing n+1 at position j adds C(j-1, k-1) occurrences.
OccurrenceTable flat_pop_distribution(int n, int k);
// Same row by scanning all of S_n with the generic occurrence counter.
OccurrenceTable brute_flat_pop_distribution(int n, int k);
// Number of n-permutations avoiding Lambda_k, by scanning S_n.
BigInt brute_lambda_avoiders_all(int n, int k);

}  // namespace altperm
