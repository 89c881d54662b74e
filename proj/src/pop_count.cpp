#include "altperm/pop_count.hpp"

#include "altperm/errors.hpp"
#include "altperm/springer.hpp"

namespace altperm {

FlatPopRecurrence::FlatPopRecurrence(int k) : k_(k) {
  if (k < 3) throw DomainError("flat POP recurrences need k >= 3");
}

const BigInt& FlatPopRecurrence::value(AvoidanceShape shape, int n) {
  if (n < 0) throw DomainError("length must be nonnegative");
  extend_to(n);
  return shape == AvoidanceShape::A ? a_[n] : b_[n];
}

void FlatPopRecurrence::extend_to(int n) {
  const int have = static_cast<int>(a_.size());
  if (n < have) return;
  const SequenceTable euler = euler_numbers(std::max(n, k_ - 1));
  for (int m = have; m <= n; ++m) {
    if (m < k_) {
      a_.push_back(euler[m]);
      b_.push_back(euler[m]);
      continue;
    }
    BigInt a = 0;
    BigInt b = 0;
    if (m % 2 == 0) {
      // a(2n) = sum_{i>=1} (-1)^{i+1} C(k-1,2i) a(2n-2i)
      for (int i = 1; i <= (k_ - 1) / 2; ++i) {
        const BigInt term = binomial(k_ - 1, 2 * i) * at(a_, m - 2 * i);
        a += (i % 2 == 1) ? term : BigInt(-term);
      }
      // b(2n) = sum_{i>=0} (-1)^i C(k-1,2i+1) b(2n-2i-1)
      for (int i = 0; i <= (k_ - 2) / 2; ++i) {
        const BigInt term = binomial(k_ - 1, 2 * i + 1) * at(b_, m - 2 * i - 1);
        b += (i % 2 == 0) ? term : BigInt(-term);
      }
    } else {
      // a(2n+1) = sum_{i>=0} (-1)^i C(k-1,2i+1) a(2n-2i)
      for (int i = 0; i <= (k_ - 2) / 2; ++i) {
        const BigInt term = binomial(k_ - 1, 2 * i + 1) * at(a_, m - 1 - 2 * i);
        a += (i % 2 == 0) ? term : BigInt(-term);
      }
      // b(2n+1) = sum_{i>=1} (-1)^{i+1} C(k-1,2i) b(2n-2i+1)
      for (int i = 1; i <= (k_ - 1) / 2; ++i) {
        const BigInt term = binomial(k_ - 1, 2 * i) * at(b_, m - 2 * i);
        b += (i % 2 == 1) ? term : BigInt(-term);
      }
    }
    a_.push_back(a);
    b_.push_back(b);
  }
}

BigInt flat_pop_count_rec(int k, int n, AvoidanceShape shape) {
  FlatPopRecurrence rec(k);
  return rec.value(shape, n);
}

SymmetryOp flat_pop_symmetry(FlatPopVariant variant) {
  switch (variant) {
    case FlatPopVariant::TopFirst: return SymmetryOp::Reverse;
    case FlatPopVariant::Vee: return SymmetryOp::Complement;
    case FlatPopVariant::BottomFirst: return SymmetryOp::ReverseComplement;
    case FlatPopVariant::Lambda: break;
  }
  throw DomainError("Lambda_k is the base pattern, not a symmetry image");
}

AvoidanceShape pop_table_shape(FlatPopVariant variant, AltClass cls, int n) {
  // pi avoids the image of Lambda_k under op iff op(pi) avoids Lambda_k.
  const AltClass image = variant == FlatPopVariant::Lambda ? cls : symmetry_image(cls, n, flat_pop_symmetry(variant));
  return image == AltClass::UpDown ? AvoidanceShape::A : AvoidanceShape::B;
}

BigInt pop_table_lookup(FlatPopVariant variant, int k, AltClass cls, int n) {
  return flat_pop_count_rec(k, n, pop_table_shape(variant, cls, n));
}

bool contains_flat_pop(std::span<const int> pi, FlatPopVariant variant, int k) {
  const int n = static_cast<int>(pi.size());
  if (k > n) return false;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    switch (variant) {
      case FlatPopVariant::Lambda:  // k-1 smaller entries to the left
        for (int j = 0; j < i; ++j) count += pi[j] < pi[i];
        break;
      case FlatPopVariant::Vee:  // k-1 larger entries to the left
        for (int j = 0; j < i; ++j) count += pi[j] > pi[i];
        break;
      case FlatPopVariant::TopFirst:  // k-1 smaller entries to the right
        for (int j = i + 1; j < n; ++j) count += pi[j] < pi[i];
        break;
      case FlatPopVariant::BottomFirst:  // k-1 larger entries to the right
        for (int j = i + 1; j < n; ++j) count += pi[j] > pi[i];
        break;
    }
    if (count >= k - 1) return true;
  }
  return false;
}

BigInt brute_pop_avoiding(int n, AltClass cls, const Pop& pop) {
  unsigned long count = 0;
  for_each_alternating(n, cls, [&](std::span<const int> pi) { count += avoids(pi, pop); });
  return BigInt(count);
}

BigInt brute_flat_pop_avoiding(int n, AltClass cls, FlatPopVariant variant, int k) {
  unsigned long count = 0;
  for_each_alternating(n, cls, [&](std::span<const int> pi) { count += !contains_flat_pop(pi, variant, k); });
  return BigInt(count);
}

BigInt OccurrenceTable::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

namespace {
void trim(std::vector<BigInt>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}
}  // namespace

OccurrenceTable flat_pop_distribution(int n, int k) {
  if (k < 2) throw DomainError("flat POP distribution needs k >= 2");
  if (n < 0) throw DomainError("length must be nonnegative");
  std::vector<BigInt> row{1};  // P(0, .)
  for (int m = 0; m < n; ++m) {
    // P(m+1, l) = sum_{j=1}^{m+1} P(m, l - C(j-1, k-1))
    std::vector<long> shift(m + 1);
    long max_shift = 0;
    for (int j = 1; j <= m + 1; ++j) {
      shift[j - 1] = binomial(j - 1, k - 1).get_si();
      max_shift = std::max(max_shift, shift[j - 1]);
    }
    std::vector<BigInt> next(row.size() + static_cast<std::size_t>(max_shift), 0);
    for (long s : shift)
      for (std::size_t l = 0; l < row.size(); ++l) next[l + static_cast<std::size_t>(s)] += row[l];
    trim(next);
    row = std::move(next);
  }
  return OccurrenceTable{n, std::move(row)};
}

OccurrenceTable brute_flat_pop_distribution(int n, int k) {
  const Pop lambda = Pop::lambda(k);
  std::vector<unsigned long> counts(1, 0);
  for_each_permutation(n, [&](std::span<const int> pi) {
    const auto occ = static_cast<std::size_t>(pop_occurrences(pi, lambda));
    if (occ >= counts.size()) counts.resize(occ + 1, 0);
    ++counts[occ];
  });
  std::vector<BigInt> row;
  for (auto c : counts) row.emplace_back(c);
  trim(row);
  return OccurrenceTable{n, std::move(row)};
}

BigInt brute_lambda_avoiders_all(int n, int k) {
  const Pop lambda = Pop::lambda(k);
  unsigned long count = 0;
  for_each_permutation(n, [&](std::span<const int> pi) { count += avoids(pi, lambda); });
  return BigInt(count);
}

}  // namespace altperm
