#include <doctest.h>

#include "altperm/errors.hpp"
#include "altperm/pop_count.hpp"
#include "altperm/springer.hpp"
#include "oracles.hpp"

using namespace altperm;

namespace {

const FlatPopVariant kVariants[] = {FlatPopVariant::Lambda, FlatPopVariant::TopFirst, FlatPopVariant::BottomFirst,
                                    FlatPopVariant::Vee};
const AltClass kClasses[] = {AltClass::UpDown, AltClass::DownUp};

}  // namespace

TEST_CASE("brute avoidance examples") {
  CHECK(brute_pop_avoiding(4, AltClass::UpDown, Pop::lambda(3)) == 1);
  CHECK(brute_pop_avoiding(4, AltClass::DownUp, Pop::lambda(3)) == 2);
  CHECK(brute_pop_avoiding(2, AltClass::UpDown, Pop::lambda(3)) == 1);
  CHECK(brute_pop_avoiding(0, AltClass::UpDown, Pop::lambda(3)) == 1);
}

TEST_CASE("recurrence argument checks and base region") {
  CHECK_THROWS_AS(FlatPopRecurrence(2), DomainError);
  CHECK_THROWS_AS(flat_pop_count_rec(1, 4, AvoidanceShape::A), DomainError);
  const auto euler = euler_numbers(10);
  for (int k = 3; k <= 10; ++k)
    for (int n = 0; n < k; ++n) {
      CHECK(flat_pop_count_rec(k, n, AvoidanceShape::A) == euler[static_cast<std::size_t>(n)]);
      CHECK(flat_pop_count_rec(k, n, AvoidanceShape::B) == euler[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("small anchors") {
  FlatPopRecurrence r3(3);
  for (int n = 1; n <= 15; ++n) CHECK(r3.a(2 * n) == 1);
  CHECK(r3.a(3) == 2);
  CHECK(r3.b(3) == 1);
  CHECK(r3.b(4) == 2);
  CHECK(flat_pop_count_rec(4, 4, AvoidanceShape::A) == 3);
}

TEST_CASE("recurrences equal brute force, k in {3,4}, n <= 10") {
  for (int k = 3; k <= 4; ++k) {
    FlatPopRecurrence rec(k);
    for (int n = 0; n <= 10; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(rec.a(n) == brute_pop_avoiding(n, AltClass::UpDown, Pop::lambda(k)));
      REQUIRE(rec.b(n) == brute_pop_avoiding(n, AltClass::DownUp, Pop::lambda(k)));
    }
  }
}

TEST_CASE("fast flat detector agrees with the generic matcher, n <= 8") {
  for (int k = 2; k <= 4; ++k)
    for (FlatPopVariant v : kVariants) {
      const Pop pop = Pop::flat(v, k);
      for (int n = 1; n <= 8; ++n)
        for_each_permutation(n, [&](std::span<const int> pi) { REQUIRE(contains_flat_pop(pi, v, k) == contains_pop(pi, pop)); });
    }
}

TEST_CASE("table dispatch") {
  CHECK(pop_table_shape(FlatPopVariant::Lambda, AltClass::UpDown, 6) == AvoidanceShape::A);
  CHECK(pop_table_shape(FlatPopVariant::Lambda, AltClass::DownUp, 7) == AvoidanceShape::B);
  CHECK(pop_table_shape(FlatPopVariant::TopFirst, AltClass::UpDown, 6) == AvoidanceShape::B);
  CHECK(pop_table_shape(FlatPopVariant::TopFirst, AltClass::UpDown, 7) == AvoidanceShape::A);
  CHECK(pop_table_shape(FlatPopVariant::BottomFirst, AltClass::DownUp, 7) == AvoidanceShape::A);
  // The vee shape on down-up permutations of even length is counted by a(n):
  // complementing such a permutation gives an up-down one of the same length.
  CHECK(pop_table_shape(FlatPopVariant::Vee, AltClass::DownUp, 6) == AvoidanceShape::A);
  CHECK(brute_flat_pop_avoiding(4, AltClass::DownUp, FlatPopVariant::Vee, 3) == 1);
  CHECK(flat_pop_symmetry(FlatPopVariant::Vee) == SymmetryOp::Complement);
}

TEST_CASE("every table cell matches brute force with its own pattern, k in {3,4}, n <= 9") {
  for (int k = 3; k <= 4; ++k)
    for (FlatPopVariant v : kVariants)
      for (AltClass c : kClasses)
        for (int n = 1; n <= 9; ++n) {
          CAPTURE(to_string(v));
          CAPTURE(k);
          CAPTURE(n);
          REQUIRE(pop_table_lookup(v, k, c, n) == brute_pop_avoiding(n, c, Pop::flat(v, k)));
        }
}

TEST_CASE("symmetry images: avoiding a shape equals avoiding Lambda_k on the image class, n <= 9") {
  for (int k = 3; k <= 4; ++k)
    for (FlatPopVariant v : {FlatPopVariant::TopFirst, FlatPopVariant::BottomFirst, FlatPopVariant::Vee})
      for (AltClass c : kClasses)
        for (int n = 1; n <= 9; ++n) {
          const AltClass image = symmetry_image(c, n, flat_pop_symmetry(v));
          REQUIRE(brute_flat_pop_avoiding(n, c, v, k) == brute_flat_pop_avoiding(n, image, FlatPopVariant::Lambda, k));
        }
}

TEST_CASE("occurrence distribution over all permutations") {
  CHECK(flat_pop_distribution(1, 3).counts == std::vector<BigInt>{1});
  CHECK(flat_pop_distribution(3, 3).counts == std::vector<BigInt>{4, 2});
  CHECK(flat_pop_distribution(6, 3).total() == 720);
  CHECK(flat_pop_distribution(0, 3).total() == 1);
  CHECK(flat_pop_distribution(3, 3).at(7) == 0);
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 7; ++n) {
      const auto rec = flat_pop_distribution(n, k);
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(rec.counts == brute_flat_pop_distribution(n, k).counts);
      REQUIRE(rec.total() == oracle::factorial(n));
      REQUIRE(rec.at(0) == brute_lambda_avoiders_all(n, k));
      REQUIRE(rec.counts.back() != 0);
    }
}

TEST_CASE("occurrence distribution matches the subset oracle, k = 3, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> expected;
    for (const auto& p : oracle::all_permutations(n)) {
      const auto l = static_cast<std::size_t>(oracle::lambda_occurrences(p, 3));
      if (expected.size() <= l) expected.resize(l + 1, 0);
      expected[l] += 1;
    }
    CHECK(flat_pop_distribution(n, 3).counts == expected);
  }
}
