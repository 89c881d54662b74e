#include "altperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "altperm/errors.hpp"

namespace altperm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw UnsupportedInput("not a permutation of 1.." + std::to_string(n));
    seen[v] = 1;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (separated) {
    int cur = -1;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
      } else if (ch == ',' || ch == ' ') {
        if (cur >= 0) values.push_back(cur);
        cur = -1;
      } else {
        throw UnsupportedInput("bad character in permutation '" + std::string(text) + "'");
      }
    }
    if (cur >= 0) values.push_back(cur);
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw UnsupportedInput("bad character in permutation '" + std::string(text) + "'");
      values.push_back(ch - '0');
    }
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (wide && i > 0) s += ',';
    s += std::to_string(values_[i]);
  }
  return s;
}

std::string to_string(AltClass c) { return c == AltClass::UpDown ? "ud" : "du"; }

std::string to_string(StatKind k) {
  switch (k) {
    case StatKind::LrMax: return "lrmax";
    case StatKind::RlMax: return "rlmax";
    case StatKind::LrMin: return "lrmin";
    case StatKind::RlMin: return "rlmin";
  }
  return "?";
}

Permutation symmetry(const Permutation& pi, SymmetryOp op) {
  const int n = pi.size();
  std::vector<int> v(pi.values().begin(), pi.values().end());
  if (op == SymmetryOp::Reverse || op == SymmetryOp::ReverseComplement) std::reverse(v.begin(), v.end());
  if (op == SymmetryOp::Complement || op == SymmetryOp::ReverseComplement)
    for (int& x : v) x = n + 1 - x;
  return Permutation(std::move(v));
}

AltClass symmetry_image(AltClass cls, int n, SymmetryOp op) {
  auto flip = [](AltClass c) { return c == AltClass::UpDown ? AltClass::DownUp : AltClass::UpDown; };
  // Reversal keeps the class for odd n (n-1 comparisons, even count) and
  // flips it for even n; complement always flips.
  const bool even = n % 2 == 0;
  switch (op) {
    case SymmetryOp::Reverse: return even ? flip(cls) : cls;
    case SymmetryOp::Complement: return flip(cls);
    case SymmetryOp::ReverseComplement: return even ? cls : flip(cls);
  }
  return cls;
}

bool is_alternating(std::span<const int> pi, AltClass cls) {
  bool want_up = cls == AltClass::UpDown;
  for (std::size_t i = 1; i < pi.size(); ++i) {
    if ((pi[i - 1] < pi[i]) != want_up) return false;
    want_up = !want_up;
  }
  return true;
}

int stat(std::span<const int> pi, StatKind kind) {
  if (pi.empty()) throw DomainError("stat: empty permutation");
  const int n = static_cast<int>(pi.size());
  const bool left_to_right = kind == StatKind::LrMax || kind == StatKind::LrMin;
  const bool maxima = kind == StatKind::LrMax || kind == StatKind::RlMax;
  int count = 0;
  int best = maxima ? 0 : n + 1;
  for (int step = 0; step < n; ++step) {
    const int v = pi[left_to_right ? step : n - 1 - step];
    if (maxima ? v > best : v < best) {
      best = v;
      ++count;
    }
  }
  return count;
}

int stat(const Permutation& pi, StatKind kind) { return stat(pi.values(), kind); }

bool matches_mmp_at(std::span<const int> pi, int index, const MmpSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int v = pi[index];
  int quadrant[4] = {0, 0, 0, 0};
  for (int j = 0; j < n; ++j) {
    if (j == index) continue;
    const bool right = j > index;
    const bool above = pi[j] > v;
    if (right && above) ++quadrant[0];
    else if (!right && above) ++quadrant[1];
    else if (!right) ++quadrant[2];
    else ++quadrant[3];
  }
  return quadrant[0] >= spec.a && quadrant[1] >= spec.b && quadrant[2] >= spec.c && quadrant[3] >= spec.d;
}

int mmp_count(std::span<const int> pi, const MmpSpec& spec) {
  int count = 0;
  for (int i = 0; i < static_cast<int>(pi.size()); ++i)
    if (matches_mmp_at(pi, i, spec)) ++count;
  return count;
}

bool is_rc_fixed(std::span<const int> pi) {
  const std::size_t n = pi.size();
  for (std::size_t i = 0; i < n; ++i)
    if (pi[i] != static_cast<int>(n) + 1 - pi[n - 1 - i]) return false;
  return true;
}

ExtremeStats extreme_stats(std::span<const int> pi) {
  const int len = static_cast<int>(pi.size());
  if (len == 0 || len % 2 != 0 || !is_alternating(pi, AltClass::UpDown) || !is_rc_fixed(pi))
    throw DomainError("extreme_stats: input must be an rc-fixed up-down permutation of even length");
  int pos_min = -1;
  int pos_max = -1;
  for (int i = 0; i < len; ++i) {
    if (pi[i] == 1) pos_min = i;
    if (pi[i] == len) pos_max = i;
  }
  const int gap = std::abs(pos_min - pos_max) - 1;
  if (gap % 2 != 0) throw InternalError("extreme_stats: odd number of entries between the extremes");
  return ExtremeStats{std::min(pos_min, pos_max), gap / 2};
}

namespace {

// Backtracking over positions; `used` is a bitmask over values 1..n.
struct AlternatingWalker {
  int n;
  bool first_up;
  FirstValueRange range;
  const PermutationVisitor& visit;
  std::vector<int> current;
  std::uint32_t used = 0;

  void step(int pos) {
    if (pos == n) {
      visit(std::span<const int>(current.data(), current.size()));
      return;
    }
    int lo = 1;
    int hi = n;
    if (pos == 0) {
      lo = std::max(lo, range.lo);
      hi = std::min(hi, range.hi);
    } else {
      // Position pos follows comparison number pos-1 (0-based): ascent when
      // its parity matches the first comparison.
      const bool up = ((pos - 1) % 2 == 0) == first_up;
      if (up) lo = current[pos - 1] + 1;
      else hi = current[pos - 1] - 1;
    }
    for (int v = lo; v <= hi; ++v) {
      const std::uint32_t bit = 1u << v;
      if (used & bit) continue;
      used |= bit;
      current[pos] = v;
      step(pos + 1);
      used &= ~bit;
    }
  }
};

}  // namespace

void for_each_alternating(int n, AltClass cls, const PermutationVisitor& visit, FirstValueRange range) {
  if (n < 0) throw DomainError("length must be nonnegative");
  if (n > 30) throw DomainError("length too large for enumeration");
  if (n == 0) {
    visit(std::span<const int>());
    return;
  }
  AlternatingWalker walker{n, cls == AltClass::UpDown, range, visit, std::vector<int>(n)};
  walker.step(0);
}

std::vector<Permutation> enumerate_alternating(int n, AltClass cls) {
  std::vector<Permutation> out;
  for_each_alternating(n, cls, [&](std::span<const int> pi) {
    out.emplace_back(std::vector<int>(pi.begin(), pi.end()));
  });
  return out;
}

void for_each_permutation(int n, const PermutationVisitor& visit) {
  if (n < 0) throw DomainError("length must be nonnegative");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(std::span<const int>(v.data(), v.size()));
  } while (std::next_permutation(v.begin(), v.end()));
}

void for_each_rc_fixed(int n, const PermutationVisitor& visit) {
  if (n < 0 || n % 2 != 0) throw DomainError("rc-fixed up-down permutations need even length");
  for_each_alternating(n, AltClass::UpDown, [&](std::span<const int> pi) {
    if (is_rc_fixed(pi)) visit(pi);
  });
}

std::vector<Permutation> enumerate_rc_fixed(int n) {
  std::vector<Permutation> out;
  for_each_rc_fixed(n, [&](std::span<const int> pi) { out.emplace_back(std::vector<int>(pi.begin(), pi.end())); });
  return out;
}

std::vector<FirstValueRange> partition_first_values(int n, int parts) {
  std::vector<FirstValueRange> out;
  if (n <= 0) {
    out.push_back({});
    return out;
  }
  parts = std::clamp(parts, 1, n);
  for (int i = 0; i < parts; ++i) {
    const int lo = 1 + (n * i) / parts;
    const int hi = (n * (i + 1)) / parts;
    if (lo <= hi) out.push_back({lo, hi});
  }
  return out;
}

}  // namespace altperm
