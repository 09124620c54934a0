#pragma once

#include <string>
#include <vector>

#include "isores/rational.hpp"
#include "isores/subset_mask.hpp"

namespace isores {

/// Stratum datum (a1, a2, -b_1, ..., -b_p) of k-differentials on the sphere.
/// Pole orders are stored as positive integers. Instances only come out of
/// validate_signature, so every one satisfies:
///   a1 + a2 - sum(b) == -2k, k | b_i > 0, gcd(a_i, k) == 1, a1 > -k, k >= 2.
class Signature {
 public:
  long k() const noexcept { return k_; }
  long a1() const noexcept { return a1_; }
  long a2() const noexcept { return a2_; }
  /// a1 or a2.
  long a(int side) const noexcept { return side == 1 ? a1_ : a2_; }
  const std::vector<long>& b() const noexcept { return b_; }
  unsigned p() const noexcept { return static_cast<unsigned>(b_.size()); }

  /// Sum of b_i over the subset.
  long pole_sum(SubsetMask subset) const;
  /// True when every pole has order exactly -k.
  bool all_poles_order_k() const;

  /// "(k; a1,a2; [b...])"
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  friend Signature validate_signature(long k, long a1, long a2, std::vector<long> b);
  Signature(long k, long a1, long a2, std::vector<long> b)
      : k_(k), a1_(a1), a2_(a2), b_(std::move(b)) {}

  long k_;
  long a1_;
  long a2_;
  std::vector<long> b_;
};

/// Throws Error naming the violated invariant.
Signature validate_signature(long k, long a1, long a2, std::vector<long> b);

/// c_{side,I} = a_side + k - sum_{i in I} b_i.
long c_coeff(const Signature& sig, int side, SubsetMask subset);

/// Degree of the isoresidual cover:
///   sum over I with c_{1,I} > 0 of c_{1,I} f_k(a1,|I|+1) f_k(a2,|I^c|+1).
BigInt degree_generic(const Signature& sig, const Limits& limits = {});

/// The same degree expanded around the second zero:
///   sum over I with c_{2,I} > 0 of c_{2,I} f_k(a2,|I|+1) f_k(a1,|I^c|+1).
/// Returned as an exact rational so a disagreement is visible.
Rational degree_generic_swapped(const Signature& sig, const Limits& limits = {});

/// Closed form binom(p-1, ceil(a1/k)) a1!_(k) a2!_(k), valid when every pole
/// has order -k and a1, a2 > -k.
BigInt degree_order_k_poles(const Signature& sig);

/// Floating evaluation of
///   k^(p-1) binom(p-1, ceil(a1/k)) |sin(alpha1 pi)|/pi Gamma(alpha1) Gamma(alpha2)
/// with alpha_i = (a_i + k)/k. Same preconditions as degree_order_k_poles.
long double gamma_degree_estimate(const Signature& sig);

}  // namespace isores
