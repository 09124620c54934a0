#include <gtest/gtest.h>

#include <random>

#include "isores/error.hpp"
#include "isores/identities.hpp"
#include "isores/kcombinatorics.hpp"
#include "oracle.hpp"

using namespace isores;

namespace {
Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST(PartialProduct, Examples) {
  EXPECT_EQ(partial_product(3, 4, 1), q(1, 7));
  EXPECT_EQ(partial_product(3, -1, 4), q(4));
  EXPECT_EQ(partial_product(2, 3, 5), q(-3));
  EXPECT_EQ(partial_product(5, 9, 2), q(1));
  EXPECT_THROW(partial_product(3, -3, 1), Error);
  EXPECT_THROW(partial_product(3, 1, 0), Error);
}

TEST(PartialProduct, RecurrenceAbsorptionScaling) {
  for (long k = 1; k <= 5; ++k) {
    for (long a = -12; a <= 15; ++a) {
      if (a != -k) EXPECT_EQ(Rational(a + k) * partial_product(k, a, 1), q(1));
      EXPECT_EQ(partial_product(k, a, 2), q(1));
      for (long m = 3; m <= 8; ++m) {
        EXPECT_EQ(partial_product(k, a, m), Rational(a - (m - 3) * k) * partial_product(k, a, m - 1));
      }
      for (long i = 1; i <= 6; ++i) {
        EXPECT_EQ(Rational(a - (i - 1) * k) * partial_product(k, a, i + 1),
                  partial_product(k, a, i + 2));
      }
    }
    for (long B = k; B <= 6 * k; B += k) {
      for (long m = 2; m <= 7; ++m) {
        EXPECT_EQ(partial_product(k, B - k, m),
                  Rational(BigInt(k)).pow(m - 2) * abelian_f(B / k - 1, m));
      }
    }
  }
}

TEST(KFactorial, Examples) {
  EXPECT_EQ(k_factorial(4, 13), 585);
  EXPECT_EQ(k_factorial(4, 3), 3);
  EXPECT_EQ(k_factorial(2, -1), 1);
  EXPECT_EQ(k_factorial(2, 7), 105);
  EXPECT_EQ(k_factorial(3, 0), 1);
}

TEST(AbelianF, Examples) {
  EXPECT_EQ(abelian_f(2, 4), q(2));
  EXPECT_EQ(abelian_f(5, 7), q(120));
  EXPECT_EQ(abelian_f(1, 3), q(1));
}

TEST(FkPolynomial, ExamplesAndDerivatives) {
  EXPECT_EQ(fk_as_polynomial(2, 2), UniPoly::constant(q(1)));
  EXPECT_EQ(fk_as_polynomial(2, 4), UniPoly({q(0), q(-2), q(1)}));
  EXPECT_EQ(fk_derivative(2, 4, 1, 3), q(4));
  EXPECT_EQ(fk_derivative(2, 4, 3, 3), q(0));
  EXPECT_EQ(fk_derivative(2, 4, -1, 3), q(0));
  EXPECT_THROW(fk_as_polynomial(2, 1), Error);
}

TEST(FkPolynomial, DerivativesMatchTaylorOracle) {
  for (long k = 1; k <= 5; ++k)
    for (long m = 2; m <= 8; ++m)
      for (long r = 0; r <= m - 2; ++r)
        for (long a = -6; a <= 6; ++a) {
          const Rational scaled = fk_derivative(k, m, r, a) / Rational(factorial(r));
          EXPECT_EQ(scaled.raw(), mpq_class(oracle::fk_taylor(k, m, r, a)));
        }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 4), 5);
  EXPECT_EQ(binomial(3, 1), 3);
  EXPECT_EQ(binomial(9, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Identities, FkSplitSampled) {
  for (long n = 2; n <= 8; n += 3)
    for (long k = 1; k <= 5; ++k)
      for (long a1 = -6; a1 <= 12; a1 += 5)
        for (long a2 = -6; a2 <= 12; a2 += 3) {
          EXPECT_EQ(fk_split_rhs(k, n, a1, a2), partial_product(k, a2, n + 1))
              << "k=" << k << " n=" << n << " a1=" << a1 << " a2=" << a2;
        }
  EXPECT_THROW(fk_split_rhs(2, 1, 0, 0), Error);
}

TEST(Identities, ZeroSumSampled) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const long k = std::uniform_int_distribution<long>(1, 5)(rng);
    std::vector<long> b(std::uniform_int_distribution<unsigned>(1, 6)(rng));
    for (auto& bi : b) bi = k * std::uniform_int_distribution<long>(1, 4)(rng);
    const long a1 = std::uniform_int_distribution<long>(-k + 1, 25)(rng);
    EXPECT_TRUE(zero_sum_identity(k, a1, b).is_zero());
  }
}
