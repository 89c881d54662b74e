#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altperm {

// One-line notation of a rearrangement of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  // Throws UnsupportedInput unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  // "34152" (single digits) or "3,4,10,..." / "3 4 10 ..." for n >= 10.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const noexcept { return values_; }

  // Concatenated digits for n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

enum class AltClass { UpDown, DownUp };
enum class SymmetryOp { Reverse, Complement, ReverseComplement };
enum class StatKind { LrMax, RlMax, LrMin, RlMin };

std::string to_string(AltClass c);
std::string to_string(StatKind k);

// Quadrant thresholds for MMP(a,b,c,d); a zero threshold imposes nothing.
struct MmpSpec {
  int a = 0;  // quadrant I   (right, above)
  int b = 0;  // quadrant II  (left, above)
  int c = 0;  // quadrant III (left, below)
  int d = 0;  // quadrant IV  (right, below)
};

Permutation symmetry(const Permutation& pi, SymmetryOp op);
// Image of the alternating class of length n under op.
AltClass symmetry_image(AltClass cls, int n, SymmetryOp op);

bool is_alternating(std::span<const int> pi, AltClass cls);
inline bool is_alternating(const Permutation& pi, AltClass cls) { return is_alternating(pi.values(), cls); }

int stat(std::span<const int> pi, StatKind kind);
int stat(const Permutation& pi, StatKind kind);

bool matches_mmp_at(std::span<const int> pi, int index, const MmpSpec& spec);
int mmp_count(std::span<const int> pi, const MmpSpec& spec);
inline int mmp_count(const Permutation& pi, const MmpSpec& spec) { return mmp_count(pi.values(), spec); }

bool is_rc_fixed(std::span<const int> pi);
inline bool is_rc_fixed(const Permutation& pi) { return is_rc_fixed(pi.values()); }

struct ExtremeStats {
  int lle = 0;
  int be = 0;
  friend bool operator==(const ExtremeStats&, const ExtremeStats&) = default;
};

// Defined on rc-fixed up-down permutations of even length only.
ExtremeStats extreme_stats(std::span<const int> pi);
inline ExtremeStats extreme_stats(const Permutation& pi) { return extreme_stats(pi.values()); }

// Restricts a sweep to permutations whose first value lies in [lo, hi], so
// sweeps can be split across workers and the partial results added.
struct FirstValueRange {
  int lo = 1;
  int hi = 1 << 30;
};

using PermutationVisitor = std::function<void(std::span<const int>)>;

// Visits every alternating permutation of length n in the class, in
// lexicographic order, by backtracking with the alternation checked at each
// step. The span is only valid during the call.
void for_each_alternating(int n, AltClass cls, const PermutationVisitor& visit, FirstValueRange range = {});
std::vector<Permutation> enumerate_alternating(int n, AltClass cls);

// All of S_n in lexicographic order.
void for_each_permutation(int n, const PermutationVisitor& visit);

// Up-down permutations of even length n fixed by reverse-complement.
void for_each_rc_fixed(int n, const PermutationVisitor& visit);
std::vector<Permutation> enumerate_rc_fixed(int n);

// Splits [1, n] into at most `parts` contiguous first-value ranges.
std::vector<FirstValueRange> partition_first_values(int n, int parts);

}  // namespace altperm

template <>
struct std::hash<altperm::Permutation> {
  std::size_t operator()(const altperm::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.values()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
