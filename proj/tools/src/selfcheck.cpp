#include "isores/cli/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <sstream>

#include "isores/error.hpp"
#include "isores/fiber.hpp"
#include "isores/identities.hpp"
#include "isores/kcombinatorics.hpp"
#include "isores/spherical.hpp"
#include "isores/strata.hpp"

namespace isores::cli {

namespace {

// Runs `body` and records the first mismatch it reports. `body` returns an
// empty string on success and a description otherwise, once per instance.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (!ok && result_.detail.empty()) result_.detail = describe();
  }

  CheckResult finish() {
    result_.passed = result_.detail.empty() && result_.instances > 0;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

CheckResult guarded(const std::string& name, const std::function<void(Check&)>& body) {
  Check check(name);
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  return check.finish();
}

template <class A, class B>
std::string mismatch(const std::string& what, const A& got, const B& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

std::vector<Cyclotomic> rational_roots(std::initializer_list<long> values) {
  std::vector<Cyclotomic> out;
  for (long v : values) out.push_back(Cyclotomic::rational(Rational(v)));
  return out;
}

// Signatures (k; a1, a2; b) with random pole orders that pass validation.
std::vector<Signature> random_signatures(std::mt19937_64& rng, std::size_t count,
                                         unsigned max_p) {
  std::vector<Signature> out;
  std::uniform_int_distribution<long> level(2, 5);
  std::uniform_int_distribution<unsigned> poles(1, max_p);
  std::uniform_int_distribution<long> mult(1, 3);
  while (out.size() < count) {
    const long k = level(rng);
    std::vector<long> b(poles(rng));
    long sum = 0;
    for (auto& bi : b) sum += bi = k * mult(rng);
    const long a1 = std::uniform_int_distribution<long>(-k + 1, sum)(rng);
    const long a2 = sum - 2 * k - a1;
    if (std::gcd(a1, k) != 1 || std::gcd(a2, k) != 1) continue;
    out.push_back(validate_signature(k, a1, a2, b));
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const Limits& limits) {
  std::vector<CheckResult> results;

  results.push_back(guarded("degree regressions", [&](Check& c) {
    struct Case {
      long k, a1, a2;
      std::vector<long> b;
      long want;
    };
    const std::vector<Case> cases = {
        {2, 1, 1, {2, 2, 2}, 2},          {2, -1, 3, {2, 2, 2}, 3},
        {2, 1, 3, {2, 2, 2, 2}, 9},       {3, 4, -1, {3, 3, 3}, 4},
        {4, 5, -1, {4, 4, 4}, 5},         {4, 13, 3, {4, 4, 4, 4, 4, 4}, 8775},
    };
    for (const auto& t : cases) {
      const auto sig = validate_signature(t.k, t.a1, t.a2, t.b);
      const BigInt got = degree_generic(sig, limits);
      c.expect(got == t.want, [&] { return mismatch(sig.to_string(), got, t.want); });
    }
  }));

  results.push_back(guarded("fiber regressions", [&](Check& c) {
    auto expect_count = [&](const Signature& sig, const ResidueTuple& rt, long want) {
      const auto report = fiber_count(sig, rt, limits);
      c.expect(report.count == want, [&] { return mismatch(sig.to_string(), report.count, want); });
    };
    expect_count(validate_signature(2, 1, 3, {2, 2, 2, 2}),
                 ResidueTuple::exact(2, 4,
                                     {Cyclotomic::rational(Rational(1)), cyc_from_string("z", 4),
                                      Cyclotomic::rational(Rational(5)),
                                      Cyclotomic::rational(Rational(-5))}),
                 8);
    expect_count(validate_signature(3, 4, -1, {3, 3, 3}),
                 ResidueTuple::exact(3, 1, rational_roots({1, 1, 1})), 0);
    expect_count(validate_signature(4, 5, -1, {4, 4, 4}),
                 ResidueTuple::exact(4, 4,
                                     {Cyclotomic::rational(Rational(1)),
                                      Cyclotomic::rational(Rational(1)),
                                      cyc_from_string("1+z", 4)}),
                 0);

    const auto sig = validate_signature(4, 13, 3, {4, 4, 4, 4, 4, 4});
    const auto report = fiber_count(sig, ResidueTuple::exact(4, 1, rational_roots({1, 1, 1, 1, 1, 1})),
                                    limits);
    c.expect(report.count == 0, [&] { return mismatch(sig.to_string(), report.count, 0); });
    // Subtotals by block-size shape.
    std::map<std::vector<unsigned>, Rational> shape;
    for (const auto& t : report.terms) {
      if (t.partition.blocks.empty()) continue;
      std::vector<unsigned> sizes;
      for (auto b : t.partition.blocks) sizes.push_back(b.size());
      std::sort(sizes.begin(), sizes.end());
      shape[sizes] += t.contribution;
    }
    const std::map<std::vector<unsigned>, long> want = {
        {{2}, -6075}, {{4}, -2430}, {{6}, -12000}, {{2, 2}, 2295}, {{2, 4}, 13770}, {{2, 2, 2}, -4335}};
    c.expect(shape.size() == want.size(), [&] { return mismatch("shape count", shape.size(), want.size()); });
    for (const auto& [sizes, total] : want) {
      const Rational got = shape.count(sizes) ? shape[sizes] : Rational();
      c.expect(got == Rational(total), [&] { return mismatch("subtotal", got, total); });
    }
  }));

  results.push_back(guarded("abelian number regressions", [&](Check& c) {
    auto expect_ab = [&](const ResidueTuple& rt, SubsetMask subset, std::uint64_t want) {
      const auto got = abelian_number(rt, subset, limits);
      c.expect(got == want, [&] { return mismatch(subset.to_string(), got, want); });
    };
    expect_ab(ResidueTuple::exact(3, 1, rational_roots({1, 1, 1})), SubsetMask::full(3), 2);
    const auto six = ResidueTuple::exact(4, 1, rational_roots({1, 1, 1, 1, 1, 1}));
    expect_ab(six, SubsetMask::of({0, 1}), 1);
    expect_ab(six, SubsetMask::of({0, 1, 2, 3}), 9);
    expect_ab(six, SubsetMask::full(6), 100);
    const auto tilted =
        ResidueTuple::exact(4, 4,
                            {Cyclotomic::rational(Rational(1)), Cyclotomic::rational(Rational(1)),
                             cyc_from_string("1+z", 4)});
    expect_ab(tilted, SubsetMask::of({0, 1}), 1);
    expect_ab(tilted, SubsetMask::full(3), 2);
  }));

  results.push_back(guarded("G coefficient regressions", [&](Check& c) {
    const auto sig = validate_signature(4, 13, 3, {4, 4, 4, 4, 4, 4});
    auto expect_product = [&](SubsetMask j0, std::vector<SubsetMask> blocks, long want) {
      Rational got = g_coefficient(sig, j0, blocks, limits);
      for (auto b : blocks) got *= block_factor(sig, b);
      c.expect(got == Rational(want), [&] { return mismatch("G f", got, want); });
    };
    const auto m = [](std::vector<unsigned> v) { return SubsetMask::of(v); };
    expect_product(m({2, 3, 4, 5}), {m({0, 1})}, 405);
    expect_product(m({4, 5}), {m({0, 1}), m({2, 3})}, 51);
    expect_product(m({}), {m({0, 1}), m({2, 3}), m({4, 5})}, 289);
    expect_product(m({}), {m({0, 1, 2, 3}), m({4, 5})}, 102);
    const auto small = validate_signature(4, 5, -1, {4, 4, 4});
    const Rational full = g_coefficient(small, m({}), {SubsetMask::full(3)}, limits);
    c.expect(full == Rational(1), [&] { return mismatch("G full", full, 1); });
  }));

  results.push_back(guarded("f_k split identity", [&](Check& c) {
    for (long n = 2; n <= 8; ++n)
      for (long k = 1; k <= 5; ++k)
        for (long a1 = -6; a1 <= 12; ++a1)
          for (long a2 = -6; a2 <= 12; ++a2) {
            const Rational lhs = partial_product(k, a2, n + 1);
            const Rational rhs = fk_split_rhs(k, n, a1, a2);
            c.expect(lhs == rhs, [&] { return mismatch("split", rhs, lhs); });
          }
  }));

  results.push_back(guarded("zero-sum identity", [&](Check& c) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 500; ++i) {
      const long k = std::uniform_int_distribution<long>(1, 5)(rng);
      std::vector<long> b(std::uniform_int_distribution<unsigned>(1, 6)(rng));
      for (auto& bi : b) bi = k * std::uniform_int_distribution<long>(1, 3)(rng);
      const long a1 = std::uniform_int_distribution<long>(-k + 1, 20)(rng);
      const Rational total = zero_sum_identity(k, a1, b);
      c.expect(total.is_zero(), [&] { return mismatch("zero sum", total, 0); });
    }
  }));

  results.push_back(guarded("expansion symmetry", [&](Check& c) {
    std::mt19937_64 rng(11);
    for (const auto& sig : random_signatures(rng, 500, 7)) {
      const Rational lhs(degree_generic(sig, limits));
      const Rational rhs = degree_generic_swapped(sig, limits);
      c.expect(lhs == rhs, [&] { return mismatch(sig.to_string(), rhs, lhs); });
    }
  }));

  // Every all-(-k) signature with k <= kmax, p <= 8 and a2 > -k.
  auto for_order_k_strata = [](long kmax, const std::function<void(const Signature&)>& fn) {
    for (long k = 2; k <= kmax; ++k)
      for (long p = 1; p <= 8; ++p)
        for (long a1 = -k + 1; a1 < p * k; ++a1) {
          const long a2 = p * k - 2 * k - a1;
          if (a2 <= -k || std::gcd(a1, k) != 1 || std::gcd(a2, k) != 1) continue;
          fn(validate_signature(k, a1, a2, std::vector<long>(p, k)));
        }
  };

  results.push_back(guarded("closed form for order -k poles", [&](Check& c) {
    for_order_k_strata(6, [&](const Signature& sig) {
      const BigInt got = degree_order_k_poles(sig);
      const BigInt want = degree_generic(sig, limits);
      c.expect(got == want, [&] { return mismatch(sig.to_string(), got, want); });
    });
  }));

  results.push_back(guarded("gamma estimate", [&](Check& c) {
    for_order_k_strata(4, [&](const Signature& sig) {
      const long double want = degree_generic(sig, limits).get_d();
      const long double got = gamma_degree_estimate(sig);
      const long double rel = std::fabs(got - want) / std::max(1.0L, std::fabs(want));
      c.expect(rel <= 1e-6L, [&] { return mismatch(sig.to_string(), got, want); });
    });
  }));

  results.push_back(guarded("spherical metrics", [&](Check& c) {
    for (long n = 1; n <= 10; ++n) {
      // Distinct primes as denominators keep the angles generic.
      std::vector<Rational> angles;
      const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
      for (long i = 0; i < n; ++i) angles.emplace_back(1, primes[i]);
      for (long a = 1; a < 2 * n; a += 2) {
        const long b = 2 * n - a;
        const BigInt got = spherical_count(make_angles(a, b, angles));
        const BigInt mirror = spherical_count(make_angles(b, a, angles));
        const BigInt want =
            degree_order_k_poles(validate_signature(2, a - 2, b - 2, std::vector<long>(n, 2)));
        c.expect(got == want && mirror == got, [&] { return mismatch("spherical", got, want); });
      }
    }
  }));

  results.push_back(guarded("cyclotomic polynomials", [&](Check& c) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
      const auto field = make_field(n);
      const UniPoly& phi = field->modulus();
      const auto zeta = Cyclotomic::root_of_unity(field, 1);
      // Horner evaluation of Phi_N at zeta_N.
      Cyclotomic value = Cyclotomic::rational(Rational(), field);
      for (int e = phi.degree(); e >= 0; --e) {
        value = value * zeta + Cyclotomic::rational(phi.coefficient(static_cast<std::size_t>(e)), field);
      }
      c.expect(value.is_zero() && static_cast<std::uint64_t>(phi.degree()) == euler_phi(n),
               [&] { return "Phi_" + std::to_string(n) + "(zeta) != 0"; });
    }
  }));

  return results;
}

}  // namespace isores::cli
