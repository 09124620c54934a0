#include "isores/spherical.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "isores/error.hpp"
#include "isores/kcombinatorics.hpp"
#include "isores/strata.hpp"

namespace isores {

SphericalAngles make_angles(long a, long b, std::vector<Rational> c) {
  if (c.empty()) throw Error(ErrorCode::InvalidAngles, "at least one angle c_i is required");
  if (a <= 0 || b <= 0 || a % 2 == 0 || b % 2 == 0) {
    throw Error(ErrorCode::InvalidAngles, "a = " + std::to_string(a) + " and b = " +
                                              std::to_string(b) + " must be odd positive integers");
  }
  const long n = static_cast<long>(c.size());
  if (a + b != 2 * n) {
    throw Error(ErrorCode::InvalidAngles, "a + b = " + std::to_string(a + b) +
                                              " must equal 2n = " + std::to_string(2 * n));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].sign() <= 0 || c[i].is_integer()) {
      throw Error(ErrorCode::InvalidAngles, "c_" + std::to_string(i + 1) + " = " +
                                                c[i].to_short_string() +
                                                " must be a positive non-integer");
    }
  }
  return SphericalAngles(a, b, std::move(c));
}

namespace {

template <typename Int>
GenericityResult search_vanishing(const std::vector<Int>& values) {
  GenericityResult result;
  const std::size_t n = values.size();
  std::vector<int> eps(n, 0);
  constexpr int kOrder[3] = {0, 1, -1};
  auto recurse = [&](auto& self, std::size_t depth, const Int& sum, bool any) -> bool {
    if (depth == n) {
      if (any && sum == 0) {
        result.generic = false;
        result.witness = eps;
        return true;
      }
      return false;
    }
    for (int e : kOrder) {
      eps[depth] = e;
      const Int next = e == 0 ? sum : (e > 0 ? Int(sum + values[depth]) : Int(sum - values[depth]));
      if (self(self, depth + 1, next, any || e != 0)) return true;
    }
    eps[depth] = 0;
    return false;
  };
  recurse(recurse, 0, Int(0), false);
  if (result.witness) {
    // Canonical sign: first nonzero entry positive.
    for (int e : *result.witness) {
      if (e == 0) continue;
      if (e < 0) {
        for (int& x : *result.witness) x = -x;
      }
      break;
    }
  }
  return result;
}

}  // namespace

GenericityResult genericity_check(const std::vector<Rational>& c, unsigned max_n) {
  if (c.size() > max_n) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "n = " + std::to_string(c.size()) + " exceeds the enumeration bound " +
                    std::to_string(max_n));
  }
  // Clear denominators; a common positive scale preserves vanishing sums.
  BigInt scale = 1;
  for (const auto& q : c) {
    BigInt den = q.denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> ints;
  BigInt total = 0;
  for (const auto& q : c) {
    ints.push_back((q * Rational(scale)).to_integer());
    total += abs(ints.back());
  }
  if (total < BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
    std::vector<std::int64_t> small;
    for (const auto& v : ints) small.push_back(v.get_si());
    return search_vanishing(small);
  }
  return search_vanishing(ints);
}

GenericityResult genericity_check(const SphericalAngles& angles, unsigned max_n) {
  return genericity_check(angles.c(), max_n);
}

BigInt spherical_count(const SphericalAngles& angles, unsigned max_n) {
  const GenericityResult g = genericity_check(angles, max_n);
  if (!g.generic) {
    std::string witness;
    for (int e : *g.witness) witness += (witness.empty() ? "" : ",") + std::to_string(e);
    throw Error(ErrorCode::NonGenericAngles,
                "sum of eps_i c_i vanishes for eps = (" + witness + ")");
  }
  const long n = angles.n();
  const BigInt count =
      binomial(n - 1, (angles.a() - 1) / 2) * k_factorial(2, angles.a() - 2) * k_factorial(2, angles.b() - 2);

  const Signature quadratic =
      validate_signature(2, angles.a() - 2, angles.b() - 2, std::vector<long>(angles.n(), 2));
  Limits limits;
  limits.max_p = std::max(limits.max_p, angles.n());
  const BigInt degree = degree_generic(quadratic, limits);
  if (degree != count) {
    throw InternalError(InternalCode::ConsistencyFailure,
                        "spherical count " + to_string(count) + " disagrees with degree " +
                            to_string(degree) + " of " + quadratic.to_string());
  }
  return count;
}

}  // namespace isores
