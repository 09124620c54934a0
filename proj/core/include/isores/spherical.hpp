#pragma once

#include <optional>
#include <vector>

#include "isores/rational.hpp"

namespace isores {

/// Cone angles a*pi, b*pi, c_1*pi, ..., c_n*pi. Only make_angles builds one,
/// so a, b are odd and positive with a + b == 2n, and every c_i is a
/// positive non-integer rational.
class SphericalAngles {
 public:
  long a() const noexcept { return a_; }
  long b() const noexcept { return b_; }
  const std::vector<Rational>& c() const noexcept { return c_; }
  unsigned n() const noexcept { return static_cast<unsigned>(c_.size()); }

 private:
  friend SphericalAngles make_angles(long a, long b, std::vector<Rational> c);
  SphericalAngles(long a, long b, std::vector<Rational> c) : a_(a), b_(b), c_(std::move(c)) {}
  long a_;
  long b_;
  std::vector<Rational> c_;
};

/// Throws InvalidAngles naming the violated constraint.
SphericalAngles make_angles(long a, long b, std::vector<Rational> c);

struct GenericityResult {
  bool generic = true;
  /// Sign vector with a vanishing sum; its first nonzero entry is +1.
  std::optional<std::vector<int>> witness;
};

/// Checks that sum eps_i c_i == 0 with eps_i in {-1,0,1} forces eps == 0.
GenericityResult genericity_check(const std::vector<Rational>& c, unsigned max_n = 16);
GenericityResult genericity_check(const SphericalAngles& angles, unsigned max_n = 16);

/// binom(n-1, (a-1)/2) (a-2)!! (b-2)!!, cross-checked against the degree of
/// the quadratic stratum (2; a-2, b-2; [-2]^n). Throws NonGenericAngles when
/// the genericity hypothesis fails.
BigInt spherical_count(const SphericalAngles& angles, unsigned max_n = 16);

}  // namespace isores
