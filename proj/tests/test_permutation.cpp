#include <doctest.h>

#include <set>

#include "altperm/errors.hpp"
#include "altperm/permutation.hpp"
#include "altperm/pop.hpp"
#include "oracles.hpp"

using namespace altperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<int> to_vec(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace

TEST_CASE("permutation parsing and validation") {
  CHECK(P("34152").to_string() == "34152");
  CHECK(Permutation::parse("3,1,10,2,4,5,6,7,8,9").size() == 10);
  CHECK(Permutation::parse("3 1 2").to_string() == "312");
  CHECK_THROWS_AS(P("1134"), UnsupportedInput);
  CHECK_THROWS_AS(P("125"), UnsupportedInput);
  CHECK_THROWS_AS(Permutation::parse("1,x"), UnsupportedInput);
  CHECK(Permutation{}.empty());
  CHECK(P("21") < P("213"));
  CHECK(std::hash<Permutation>{}(P("2413")) == std::hash<Permutation>{}(P("2413")));
}

TEST_CASE("symmetries") {
  CHECK(symmetry(P("34152"), SymmetryOp::Reverse) == P("25143"));
  CHECK(symmetry(P("34152"), SymmetryOp::Complement) == P("32514"));
  CHECK(symmetry(P("2413"), SymmetryOp::ReverseComplement) == P("2413"));
  CHECK(symmetry_image(AltClass::UpDown, 4, SymmetryOp::Reverse) == AltClass::DownUp);
  CHECK(symmetry_image(AltClass::UpDown, 5, SymmetryOp::Reverse) == AltClass::UpDown);
  CHECK(symmetry_image(AltClass::UpDown, 5, SymmetryOp::Complement) == AltClass::DownUp);
  CHECK(symmetry_image(AltClass::UpDown, 4, SymmetryOp::ReverseComplement) == AltClass::UpDown);
  CHECK(symmetry_image(AltClass::DownUp, 5, SymmetryOp::ReverseComplement) == AltClass::UpDown);
}

TEST_CASE("alternation test") {
  CHECK(is_alternating(P("2413"), AltClass::UpDown));
  CHECK_FALSE(is_alternating(P("12"), AltClass::DownUp));
  CHECK_FALSE(is_alternating(P("32154"), AltClass::UpDown));
  CHECK(is_alternating(P("1"), AltClass::UpDown));
  CHECK(is_alternating(P("1"), AltClass::DownUp));
}

TEST_CASE("enumerate_alternating small cases") {
  std::vector<std::string> ud4;
  for (const auto& p : enumerate_alternating(4, AltClass::UpDown)) ud4.push_back(p.to_string());
  CHECK(ud4 == std::vector<std::string>{"1324", "1423", "2314", "2413", "3412"});
  std::vector<std::string> du3;
  for (const auto& p : enumerate_alternating(3, AltClass::DownUp)) du3.push_back(p.to_string());
  CHECK(du3 == std::vector<std::string>{"213", "312"});
  CHECK(enumerate_alternating(1, AltClass::UpDown).size() == 1);
  CHECK(enumerate_alternating(0, AltClass::UpDown).size() == 1);
}

TEST_CASE("generator equals S_n filter and counts are Euler numbers, n <= 10") {
  const auto euler = oracle::euler_boustrophedon(10);
  for (int n = 1; n <= 10; ++n) {
    for (bool up : {true, false}) {
      const auto expected = oracle::alternating_by_filter(n, up);
      std::vector<std::vector<int>> got;
      for_each_alternating(n, up ? AltClass::UpDown : AltClass::DownUp,
                           [&](std::span<const int> pi) { got.emplace_back(pi.begin(), pi.end()); });
      CAPTURE(n);
      CAPTURE(up);
      // Same set, and lexicographic order makes that a plain vector equality.
      CHECK(got == expected);
      CHECK(altperm::BigInt(static_cast<unsigned long>(got.size())) == euler[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("partitioned sweeps cover the class exactly once") {
  for (int parts : {1, 2, 3, 7}) {
    std::vector<std::vector<int>> got;
    for (const auto& r : partition_first_values(8, parts))
      for_each_alternating(8, AltClass::DownUp, [&](std::span<const int> pi) { got.emplace_back(pi.begin(), pi.end()); }, r);
    CHECK(got == oracle::alternating_by_filter(8, false));
  }
}

TEST_CASE("record statistics") {
  CHECK(stat(P("34152"), StatKind::LrMax) == 3);
  CHECK(stat(P("34152"), StatKind::RlMin) == 2);
  CHECK(stat(P("12345"), StatKind::LrMax) == 5);
  CHECK_THROWS_AS(stat(Permutation{}, StatKind::LrMax), DomainError);
}

TEST_CASE("quadrant marked mesh patterns") {
  CHECK(mmp_count(P("471569283"), MmpSpec{1, 0, 0, 0}) == 6);
  CHECK(mmp_count(P("54321"), MmpSpec{1, 0, 0, 0}) == 0);
  CHECK(mmp_count(P("1"), MmpSpec{0, 0, 0, 0}) == 1);
  CHECK(mmp_count(P("2413"), MmpSpec{1, 1, 0, 0}) == oracle::mmp({2, 4, 1, 3}, 1, 1, 0, 0));
}

TEST_CASE("mmp complements the record statistics and agrees with the oracle, n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    for_each_permutation(n, [&](std::span<const int> pi) {
      const std::vector<int> v(pi.begin(), pi.end());
      REQUIRE(mmp_count(pi, {1, 0, 0, 0}) == n - stat(pi, StatKind::RlMax));
      REQUIRE(mmp_count(pi, {0, 1, 0, 0}) == n - stat(pi, StatKind::LrMax));
      REQUIRE(mmp_count(pi, {0, 0, 1, 0}) == n - stat(pi, StatKind::LrMin));
      REQUIRE(mmp_count(pi, {0, 0, 0, 1}) == n - stat(pi, StatKind::RlMin));
      REQUIRE(stat(pi, StatKind::RlMax) == oracle::rlmax(v));
      REQUIRE(stat(pi, StatKind::LrMax) == oracle::lrmax(v));
      REQUIRE(stat(pi, StatKind::LrMin) == oracle::lrmin(v));
      REQUIRE(stat(pi, StatKind::RlMin) == oracle::rlmin(v));
    });
  }
}

TEST_CASE("randomized mmp thresholds against the quadrant oracle") {
  std::uniform_int_distribution<int> len(1, 9), th(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> v(static_cast<std::size_t>(len(oracle::rng())));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), oracle::rng());
    const MmpSpec spec{th(oracle::rng()), th(oracle::rng()), th(oracle::rng()), th(oracle::rng())};
    REQUIRE(mmp_count(v, spec) == oracle::mmp(v, spec.a, spec.b, spec.c, spec.d));
  }
}

TEST_CASE("rlmax transported by the symmetries, n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    for_each_permutation(n, [&](std::span<const int> pi) {
      const Permutation p(std::vector<int>(pi.begin(), pi.end()));
      const int r = stat(p, StatKind::RlMax);
      REQUIRE(stat(symmetry(p, SymmetryOp::Reverse), StatKind::LrMax) == r);
      REQUIRE(stat(symmetry(p, SymmetryOp::Complement), StatKind::RlMin) == r);
      REQUIRE(stat(symmetry(p, SymmetryOp::ReverseComplement), StatKind::LrMin) == r);
    });
  }
}

TEST_CASE("reverse-complement fixed points") {
  CHECK(is_rc_fixed(P("362514")));
  CHECK(is_rc_fixed(P("57681324")));
  CHECK_FALSE(is_rc_fixed(P("1423")));
  std::vector<std::string> rc4;
  for (const auto& p : enumerate_rc_fixed(4)) rc4.push_back(p.to_string());
  CHECK(rc4 == std::vector<std::string>{"1324", "2413", "3412"});
  CHECK_THROWS_AS(enumerate_rc_fixed(5), DomainError);
  for (int n = 2; n <= 10; n += 2) {
    std::vector<std::vector<int>> expected;
    for (const auto& v : oracle::alternating_by_filter(n, true))
      if (oracle::complement(oracle::reverse(v)) == v) expected.push_back(v);
    std::vector<std::vector<int>> got;
    for (const auto& p : enumerate_rc_fixed(n)) got.push_back(to_vec(p));
    CHECK(got == expected);
  }
}

TEST_CASE("extreme statistics") {
  CHECK(extreme_stats(P("17463528")) == ExtremeStats{0, 3});
  CHECK(extreme_stats(P("28463517")).lle == 1);
  CHECK(extreme_stats(P("47381625")).be == 0);
  CHECK(extreme_stats(P("57163824")).be == 1);
  CHECK(extreme_stats(P("15372648")).be == 3);
  CHECK_THROWS_AS(extreme_stats(P("1423")), DomainError);
  CHECK_THROWS_AS(extreme_stats(P("21")), DomainError);
  CHECK_THROWS_AS(extreme_stats(P("213")), DomainError);
}

TEST_CASE("lle + be = n - 1 on rc-fixed up-down permutations of length 2n, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_rc_fixed(2 * n, [&](std::span<const int> pi) {
      const auto s = extreme_stats(pi);
      REQUIRE(s.lle + s.be == n - 1);
      // Definitions read off directly: entries left of the first extreme, and
      // half the gap between the two extremes.
      const std::vector<int> v(pi.begin(), pi.end());
      const auto lo = std::find(v.begin(), v.end(), 1) - v.begin();
      const auto hi = std::find(v.begin(), v.end(), 2 * n) - v.begin();
      REQUIRE(s.lle == std::min(lo, hi));
      REQUIRE(2 * s.be == std::abs(hi - lo) - 1);
    });
  }
}

TEST_CASE("pop occurrences") {
  const Pop three_below_one(3, {{3, 1}});
  CHECK(pop_occurrences(P("41523"), three_below_one) == 6);
  CHECK(pop_occurrences(P("12345"), Pop::lambda(3)) == 10);
  CHECK(pop_occurrences(P("54321"), Pop::lambda(3)) == 0);
  CHECK(pop_occurrences(P("12"), Pop::lambda(3)) == 0);
  CHECK(avoids(P("54321"), Pop::lambda(3)));
  CHECK_THROWS_AS(Pop(2, {{1, 2}, {2, 1}}), UnsupportedInput);
  CHECK_THROWS_AS(Pop(2, {{1, 3}}), UnsupportedInput);
  const Pop chain(3, {{1, 2}, {2, 3}});
  CHECK(chain.less(1, 3));
  CHECK(chain.relations().size() == 3);
  // A total order is a classical pattern: 123 occurs C(5,3) times in 12345.
  CHECK(pop_occurrences(P("12345"), chain) == 10);
  CHECK(pop_occurrences(P("13254"), Pop(3, {})) == 10);
}

TEST_CASE("Lambda_k occurrences equal the k-subset oracle, n <= 8, k <= 4") {
  for (int k = 2; k <= 4; ++k) {
    const Pop lam = Pop::lambda(k);
    for (int n = 1; n <= 8; ++n) {
      for_each_permutation(n, [&](std::span<const int> pi) {
        const std::vector<int> v(pi.begin(), pi.end());
        const long long expected = oracle::lambda_occurrences(v, k);
        REQUIRE(pop_occurrences(pi, lam) == expected);
        REQUIRE(contains_pop(pi, lam) == (expected > 0));
      });
    }
  }
}

TEST_CASE("flat pop shapes are images of Lambda_k under the symmetries") {
  std::uniform_int_distribution<int> len(1, 9);
  for (int k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> v(static_cast<std::size_t>(len(oracle::rng())));
      std::iota(v.begin(), v.end(), 1);
      std::shuffle(v.begin(), v.end(), oracle::rng());
      const long long lam = oracle::lambda_occurrences(v, k);
      REQUIRE(pop_occurrences(oracle::reverse(v), Pop::flat(FlatPopVariant::TopFirst, k)) == lam);
      REQUIRE(pop_occurrences(oracle::complement(v), Pop::flat(FlatPopVariant::Vee, k)) == lam);
      REQUIRE(pop_occurrences(oracle::complement(oracle::reverse(v)), Pop::flat(FlatPopVariant::BottomFirst, k)) == lam);
    }
  }
}
