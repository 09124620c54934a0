#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "isores/error.hpp"
#include "isores/resonance.hpp"
#include "oracle.hpp"

using namespace isores;

namespace {

ResidueTuple roots(long k, std::uint64_t n, std::initializer_list<const char*> exprs) {
  std::vector<Cyclotomic> r;
  for (const char* e : exprs) r.push_back(cyc_from_string(e, n));
  return ResidueTuple::exact(k, n, std::move(r));
}

SubsetMask m(std::vector<unsigned> v) { return SubsetMask::of(v); }

// Random tuple of k-th roots r_i = c_i * zeta_N^{e_i} with small c_i.
struct RootSample {
  long k;
  std::uint64_t n;
  std::vector<long> scale;
  std::vector<std::uint64_t> exponent;
};

RootSample sample(std::mt19937_64& rng, unsigned p) {
  RootSample s;
  s.k = std::uniform_int_distribution<long>(1, 5)(rng);
  const std::uint64_t ns[] = {1, 2, 3, 4, 6, 12};
  s.n = ns[std::uniform_int_distribution<int>(0, 5)(rng)];
  for (unsigned i = 0; i < p; ++i) {
    s.scale.push_back(std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 2 : 1);
    s.exponent.push_back(std::uniform_int_distribution<std::uint64_t>(0, s.n - 1)(rng));
  }
  return s;
}

ResidueTuple library_tuple(const RootSample& s) {
  std::vector<Cyclotomic> r;
  for (std::size_t i = 0; i < s.scale.size(); ++i) {
    r.push_back(Cyclotomic::rational(Rational(s.scale[i]), s.n) *
                Cyclotomic::root_of_unity(s.n, s.exponent[i]));
  }
  return ResidueTuple::exact(s.k, s.n, std::move(r));
}

std::vector<oracle::IntCyclotomic> oracle_tuple(const RootSample& s) {
  const long m = std::lcm(static_cast<long>(s.n), s.k);
  std::vector<oracle::IntCyclotomic> out;
  for (std::size_t i = 0; i < s.scale.size(); ++i) {
    oracle::IntCyclotomic x{m, std::vector<long long>(static_cast<std::size_t>(m), 0)};
    x.coeffs[s.exponent[i] * static_cast<std::uint64_t>(m) / s.n] = s.scale[i];
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Resonance, Examples) {
  EXPECT_TRUE(is_resonant(roots(3, 1, {"1", "1", "1"}), SubsetMask::full(3)));
  const auto tilted = roots(4, 4, {"1", "1", "1+z"});
  EXPECT_TRUE(is_resonant(tilted, m({0, 1})));
  EXPECT_FALSE(is_resonant(tilted, m({0, 2})));
  const auto six = roots(4, 1, {"1", "1", "1", "1", "1", "1"});
  EXPECT_FALSE(is_resonant(six, m({0, 2, 5})));
  EXPECT_THROW(is_resonant(six, SubsetMask()), Error);
  EXPECT_THROW(is_resonant(six, m({6})), Error);
}

TEST(Resonance, Profiles) {
  const auto p64 = resonant_subsets(roots(4, 4, {"1", "1", "1+z"}));
  ASSERT_EQ(p64.resonant.size(), 2U);
  EXPECT_EQ(p64.abelian_number(m({0, 1})), 1U);
  EXPECT_EQ(p64.abelian_number(m({0, 1, 2})), 2U);

  const auto p65 = resonant_subsets(roots(4, 1, {"1", "1", "1", "1", "1", "1"}));
  std::size_t pairs = 0, quads = 0, full = 0;
  for (const auto& r : p65.resonant) {
    if (r.mask.size() == 2 && r.abelian_number == 1) ++pairs;
    if (r.mask.size() == 4 && r.abelian_number == 9) ++quads;
    if (r.mask.size() == 6 && r.abelian_number == 100) ++full;
  }
  EXPECT_EQ(p65.resonant.size(), 31U);
  EXPECT_EQ(pairs, 15U);
  EXPECT_EQ(quads, 15U);
  EXPECT_EQ(full, 1U);

  EXPECT_TRUE(resonant_subsets(roots(3, 1, {"1", "2", "4"})).resonant.empty());
}

TEST(Resonance, AbelianNumbers) {
  EXPECT_EQ(abelian_number(roots(3, 1, {"1", "1", "1"}), SubsetMask::full(3)), 2U);
  const auto six = roots(4, 1, {"1", "1", "1", "1", "1", "1"});
  EXPECT_EQ(abelian_number(six, SubsetMask::full(6)), 100U);
  EXPECT_EQ(abelian_number(six, m({1, 2, 4, 5})), 9U);
  EXPECT_EQ(abelian_number(six, m({1, 2, 4})), 0U);
}

TEST(Resonance, SliceMatchesUnslicedOracle) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 80; ++t) {
    const auto s = sample(rng, std::uniform_int_distribution<unsigned>(1, 4)(rng));
    const auto rt = library_tuple(s);
    const auto full = SubsetMask::full(rt.p());
    EXPECT_EQ(static_cast<std::uint64_t>(s.k) * abelian_number(rt, full),
              oracle::unsliced_zero_sums(s.k, oracle_tuple(s)));
  }
}

TEST(Resonance, ThreeCharacterizationsAgree) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto s = sample(rng, std::uniform_int_distribution<unsigned>(2, 3)(rng));
    const auto rt = library_tuple(s);
    const auto full = SubsetMask::full(rt.p());
    const bool resonant = is_resonant(rt, full);
    EXPECT_EQ(resonant, abelian_number(rt, full) >= 1);
    const auto value = std::get<Cyclotomic>(eval_resonance_polynomial(rt, full));
    EXPECT_EQ(resonant, value.is_zero());
  }
}

TEST(Resonance, RootChoiceIndependence) {
  const auto base = roots(4, 4, {"1", "1", "1+z"});
  const auto turned = roots(4, 4, {"z", "-1", "1+z"});  // r_i -> zeta_4 r_i, zeta_4^2 r_i
  EXPECT_EQ(resonant_subsets(base).resonant, resonant_subsets(turned).resonant);
  EXPECT_EQ(residual_systole(base).value, residual_systole(turned).value);
  EXPECT_EQ(std::get<Cyclotomic>(eval_resonance_polynomial(base, SubsetMask::full(3))),
            std::get<Cyclotomic>(eval_resonance_polynomial(turned, SubsetMask::full(3))));
}

TEST(Resonance, PolynomialExamplesAndRationality) {
  const auto v = std::get<Cyclotomic>(eval_resonance_polynomial(roots(2, 1, {"1", "2"}), m({0, 1})));
  EXPECT_EQ(v, Cyclotomic::rational(Rational(9)));
  EXPECT_TRUE(std::get<Cyclotomic>(eval_resonance_polynomial(roots(3, 1, {"1", "1", "1"}),
                                                             SubsetMask::full(3)))
                  .is_zero());
  EXPECT_TRUE(
      std::get<Cyclotomic>(eval_resonance_polynomial(roots(2, 1, {"1", "1"}), m({0, 1}))).is_zero());
  // Rational residues give a rational value: (1+z)^4 = -4, z^2 = -1 for k = 4.
  const auto r = std::get<Cyclotomic>(eval_resonance_polynomial(roots(4, 4, {"1+z", "z", "3"}),
                                                                SubsetMask::full(3)));
  EXPECT_TRUE(r.is_rational());
  EXPECT_FALSE(r.is_zero());
}

TEST(Resonance, NumericHomogeneity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 20; ++t) {
    const long k = std::uniform_int_distribution<long>(2, 3)(rng);
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    std::vector<Complex> values;
    for (unsigned i = 0; i < d; ++i) values.emplace_back(u(rng), u(rng));
    const Complex lambda(u(rng), u(rng));
    std::vector<Complex> scaled;
    for (auto v : values) scaled.push_back(lambda * v);
    const auto full = SubsetMask::full(d);
    const Complex a = std::get<Complex>(eval_resonance_polynomial(ResidueTuple::numeric(k, values, 1e-12L), full));
    const Complex b = std::get<Complex>(eval_resonance_polynomial(ResidueTuple::numeric(k, scaled, 1e-12L), full));
    const Complex want = std::pow(lambda, static_cast<long double>(std::pow(k, d - 1))) * a;
    EXPECT_LT(std::abs(b - want), 1e-9L * std::max(1.0L, std::abs(want)));
  }
}

TEST(Resonance, NumericAgreesWithExact) {
  const Complex one(1, 0);
  const auto rt = ResidueTuple::numeric(4, {one, one, Complex(-4, 0)}, 1e-9L);
  const auto profile = resonant_subsets(rt);
  EXPECT_TRUE(profile.numeric);
  EXPECT_FALSE(profile.ambiguous);
  ASSERT_EQ(profile.resonant.size(), 2U);
  EXPECT_EQ(profile.abelian_number(m({0, 1})), 1U);
  EXPECT_EQ(profile.abelian_number(m({0, 1, 2})), 2U);

  // A near-miss inside [tol, 10 tol) is flagged.
  const auto near = ResidueTuple::numeric(2, {one, Complex(1 + 4e-9L, 0)}, 1e-9L);
  const auto test = test_resonance(near, m({0, 1}));
  EXPECT_FALSE(test.resonant);
  EXPECT_TRUE(test.ambiguous);
}

TEST(Resonance, PermutationPermutesProfile) {
  const auto a = resonant_subsets(roots(4, 4, {"1", "1", "1+z"}));
  const auto b = resonant_subsets(roots(4, 4, {"1+z", "1", "1"}));
  EXPECT_EQ(b.abelian_number(m({1, 2})), a.abelian_number(m({0, 1})));
  EXPECT_EQ(b.abelian_number(m({0, 1, 2})), a.abelian_number(m({0, 1, 2})));
  for (const auto& r : b.resonant) EXPECT_GE(r.mask.size(), 2U);
}

TEST(Systole, Examples) {
  EXPECT_NEAR(static_cast<double>(residual_systole(roots(3, 1, {"1", "1", "1"})).value), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(residual_systole(roots(2, 1, {"1", "10"})).value), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(residual_systole(roots(1, 1, {"3", "-3"})).value), 3.0, 1e-15);
  const auto s = residual_systole(roots(2, 4, {"1", "z", "5", "-5"}));
  EXPECT_NEAR(static_cast<double>(s.value), 1.0, 1e-15);
}

TEST(ResidueTuple, RejectsZeroAndBadInput) {
  EXPECT_THROW(roots(3, 3, {"1", "1+z+z^2"}), Error);
  EXPECT_THROW(ResidueTuple::numeric(2, {Complex(0, 0)}, 1e-9L), Error);
  EXPECT_THROW(ResidueTuple::numeric(2, {Complex(1, 0)}, 0), Error);
  EXPECT_THROW(ResidueTuple::exact(2, 1, {}), Error);
}

TEST(ResidueTuple, BudgetGuard) {
  Limits limits;
  limits.tuple_budget = 10;
  EXPECT_THROW(abelian_number(roots(4, 1, {"1", "1", "1", "1"}), SubsetMask::full(4), limits), Error);
}
