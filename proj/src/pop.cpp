#include "altperm/pop.hpp"

#include <algorithm>

#include "altperm/errors.hpp"

namespace altperm {

std::string to_string(FlatPopVariant v) {
  switch (v) {
    case FlatPopVariant::Lambda: return "lambda";
    case FlatPopVariant::TopFirst: return "top_first";
    case FlatPopVariant::BottomFirst: return "bottom_first";
    case FlatPopVariant::Vee: return "vee";
  }
  return "?";
}

Pop::Pop(int k, std::span<const std::pair<int, int>> less_than)
    : k_(k), below_(static_cast<std::size_t>(k > 0 ? k : 0) * (k > 0 ? k : 0), 0) {
  if (k < 1) throw UnsupportedInput("POP size must be at least 1");
  for (const auto& [a, b] : less_than) {
    if (a < 1 || a > k || b < 1 || b > k)
      throw UnsupportedInput("POP label outside 1.." + std::to_string(k));
    below_[index(a, b)] = 1;
  }
  // Warshall closure.
  for (int m = 1; m <= k; ++m)
    for (int a = 1; a <= k; ++a)
      if (below_[index(a, m)])
        for (int b = 1; b <= k; ++b)
          if (below_[index(m, b)]) below_[index(a, b)] = 1;
  for (int a = 1; a <= k; ++a)
    if (below_[index(a, a)]) throw UnsupportedInput("POP relation is not a strict partial order (cycle)");
}

Pop Pop::flat(FlatPopVariant variant, int k) {
  if (k < 2) throw DomainError("flat POP needs k >= 2");
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < k; ++i) {
    switch (variant) {
      case FlatPopVariant::Lambda: rel.emplace_back(i, k); break;
      case FlatPopVariant::TopFirst: rel.emplace_back(i + 1, 1); break;
      case FlatPopVariant::BottomFirst: rel.emplace_back(1, i + 1); break;
      case FlatPopVariant::Vee: rel.emplace_back(k, i); break;
    }
  }
  return Pop(k, rel);
}

std::vector<std::pair<int, int>> Pop::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= k_; ++a)
    for (int b = 1; b <= k_; ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

namespace {

// Assigns labels 1..k to increasing positions, checking each new label
// against the already placed ones.
struct OccurrenceSearch {
  std::span<const int> pi;
  const Pop& pop;
  bool stop_at_first;
  std::vector<int> chosen;
  long long count = 0;

  bool consistent(int label, int value) const {
    for (int prev = 1; prev < label; ++prev) {
      const int pv = chosen[prev - 1];
      if (pop.less(prev, label) && !(pv < value)) return false;
      if (pop.less(label, prev) && !(value < pv)) return false;
    }
    return true;
  }

  void place(int label, int from) {
    const int k = pop.size();
    const int n = static_cast<int>(pi.size());
    if (label > k) {
      ++count;
      return;
    }
    // leave room for the remaining labels
    for (int i = from; i <= n - (k - label + 1); ++i) {
      if (!consistent(label, pi[i])) continue;
      chosen[label - 1] = pi[i];
      place(label + 1, i + 1);
      if (stop_at_first && count > 0) return;
    }
  }
};

}  // namespace

long long pop_occurrences(std::span<const int> pi, const Pop& pop) {
  if (pop.size() > static_cast<int>(pi.size())) return 0;
  OccurrenceSearch s{pi, pop, false, std::vector<int>(pop.size())};
  s.place(1, 0);
  return s.count;
}

bool contains_pop(std::span<const int> pi, const Pop& pop) {
  if (pop.size() > static_cast<int>(pi.size())) return false;
  OccurrenceSearch s{pi, pop, true, std::vector<int>(pop.size())};
  s.place(1, 0);
  return s.count > 0;
}

}  // namespace altperm
