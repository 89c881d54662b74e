#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

// The four flat posets: one extreme element over/under an antichain.
enum class FlatPopVariant {
  Lambda,       // bottoms 1..k-1 under top k
  TopFirst,     // top 1 over bottoms 2..k
  BottomFirst,  // bottom 1 under tops 2..k
  Vee,          // tops 1..k-1 over bottom k
};

std::string to_string(FlatPopVariant v);

// Partially ordered pattern on labels 1..k. The relation is stored
// transitively closed; a pair (a, b) means label a is below label b.
class Pop {
 public:
  // Throws UnsupportedInput on labels outside 1..k or a cyclic relation.
  Pop(int k, std::span<const std::pair<int, int>> less_than);
  Pop(int k, std::initializer_list<std::pair<int, int>> less_than)
      : Pop(k, std::span<const std::pair<int, int>>(less_than.begin(), less_than.size())) {}

  static Pop flat(FlatPopVariant variant, int k);
  static Pop lambda(int k) { return flat(FlatPopVariant::Lambda, k); }

  int size() const noexcept { return k_; }
  bool less(int a, int b) const { return below_[index(a, b)] != 0; }
  // Sorted closed relation.
  std::vector<std::pair<int, int>> relations() const;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a - 1) * k_ + (b - 1); }

  int k_;
  std::vector<char> below_;
};

// Number of index tuples i_1 < ... < i_k such that every comparable pair
// a <_P b has pi[i_a] < pi[i_b]. Incomparable labels are unconstrained.
long long pop_occurrences(std::span<const int> pi, const Pop& pop);
inline long long pop_occurrences(const Permutation& pi, const Pop& pop) { return pop_occurrences(pi.values(), pop); }

bool contains_pop(std::span<const int> pi, const Pop& pop);
inline bool avoids(std::span<const int> pi, const Pop& pop) { return !contains_pop(pi, pop); }
inline bool avoids(const Permutation& pi, const Pop& pop) { return avoids(pi.values(), pop); }

}  // namespace altperm
