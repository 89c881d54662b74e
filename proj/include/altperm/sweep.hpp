#pragma once

#include <algorithm>
#include <span>
#include <thread>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

// Runs `visit(acc, pi)` over every alternating permutation, splitting the
// sweep by first value across `threads` workers and summing the per-worker
// accumulators with +=. threads <= 1 runs inline.
template <class Acc, class Visit>
Acc sweep_alternating(int n, AltClass cls, int threads, const Acc& zero, Visit visit) {
  if (threads <= 1 || n < 2) {
    Acc acc = zero;
    for_each_alternating(n, cls, [&](std::span<const int> pi) { visit(acc, pi); });
    return acc;
  }
  const auto ranges = partition_first_values(n, threads);
  std::vector<Acc> partial(ranges.size(), zero);
  std::vector<std::thread> workers;
  workers.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    workers.emplace_back([&, i] {
      for_each_alternating(n, cls, [&](std::span<const int> pi) { visit(partial[i], pi); }, ranges[i]);
    });
  }
  for (auto& w : workers) w.join();
  Acc total = zero;
  for (const auto& p : partial) total += p;
  return total;
}

inline int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace altperm
