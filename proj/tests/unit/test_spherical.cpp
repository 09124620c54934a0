#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "isores/error.hpp"
#include "isores/spherical.hpp"
#include "isores/strata.hpp"

using namespace isores;

namespace {

std::vector<Rational> angles(std::initializer_list<const char*> c) {
  std::vector<Rational> out;
  for (const char* s : c) out.push_back(Rational::parse(s));
  return out;
}

}  // namespace

TEST(Genericity, Examples) {
  EXPECT_TRUE(genericity_check(angles({"1/2", "3/2"})).generic);
  const auto equal = genericity_check(angles({"1/2", "1/2"}));
  EXPECT_FALSE(equal.generic);
  ASSERT_TRUE(equal.witness.has_value());
  EXPECT_EQ(*equal.witness, (std::vector<int>{1, -1}));
  EXPECT_TRUE(genericity_check(angles({"1/3", "5/3", "7/3"})).generic);
  EXPECT_FALSE(genericity_check(angles({"1/2", "5/2", "3"})).generic);
}

TEST(Genericity, InvariantUnderPermutationAndScaling) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const unsigned n = std::uniform_int_distribution<unsigned>(1, 6)(rng);
    std::vector<Rational> c;
    for (unsigned i = 0; i < n; ++i) {
      c.emplace_back(BigInt(std::uniform_int_distribution<long>(1, 9)(rng)),
                     BigInt(std::uniform_int_distribution<long>(2, 4)(rng)));
    }
    const bool base = genericity_check(c).generic;
    auto shuffled = c;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(genericity_check(shuffled).generic, base);
    const Rational lambda(BigInt(std::uniform_int_distribution<long>(1, 7)(rng)), BigInt(3));
    for (auto& x : shuffled) x *= lambda;
    EXPECT_EQ(genericity_check(shuffled).generic, base);
  }
}

TEST(Genericity, WitnessVanishes) {
  const auto c = angles({"1/2", "5/6", "4/3", "7/5"});
  const auto result = genericity_check(c);
  ASSERT_FALSE(result.generic);
  Rational sum;
  for (std::size_t i = 0; i < c.size(); ++i) sum += Rational((*result.witness)[i]) * c[i];
  EXPECT_TRUE(sum.is_zero());
}

TEST(Spherical, Examples) {
  const auto generic3 = angles({"1/2", "5/2", "7/3"});
  EXPECT_EQ(spherical_count(make_angles(3, 3, generic3)), 2);
  EXPECT_EQ(spherical_count(make_angles(1, 5, generic3)), 3);
  EXPECT_EQ(spherical_count(make_angles(5, 1, generic3)), 3);
  EXPECT_EQ(spherical_count(make_angles(1, 1, angles({"1/2"}))), 1);
}

TEST(Spherical, Rejections) {
  EXPECT_THROW(make_angles(2, 4, angles({"1/2", "1/3", "1/5"})), Error);  // even
  EXPECT_THROW(make_angles(3, 1, angles({"1/2", "1/3", "1/5"})), Error);  // a + b != 2n
  EXPECT_THROW(make_angles(1, 1, angles({"2"})), Error);                 // integer angle
  EXPECT_THROW(make_angles(1, 1, angles({"-1/2"})), Error);              // nonpositive
  try {
    spherical_count(make_angles(1, 3, angles({"1/2", "1/2"})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonGenericAngles);
  }
}

TEST(Spherical, MatchesQuadraticStratum) {
  const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (long n = 1; n <= 10; ++n) {
    std::vector<Rational> c;
    for (long i = 0; i < n; ++i) c.emplace_back(BigInt(1), BigInt(primes[i]));
    for (long a = 1; a < 2 * n; a += 2) {
      const long b = 2 * n - a;
      const BigInt got = spherical_count(make_angles(a, b, c));
      EXPECT_EQ(got, spherical_count(make_angles(b, a, c)));
      EXPECT_EQ(got, degree_order_k_poles(validate_signature(2, a - 2, b - 2, std::vector<long>(n, 2))));
    }
  }
}
