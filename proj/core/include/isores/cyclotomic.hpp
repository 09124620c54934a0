#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isores/rational.hpp"
#include "isores/unipoly.hpp"

namespace isores {

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// The N-th cyclotomic polynomial, obtained by exact division of x^N - 1 by
/// the cyclotomic polynomials of the proper divisors of N.
UniPoly cyclotomic_polynomial(std::uint64_t n);

/// Immutable description of Q(zeta_N): the modulus Phi_N and the reductions of
/// x^0 .. x^(N-1) modulo Phi_N over the power basis.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint64_t conductor);

  std::uint64_t conductor() const noexcept { return conductor_; }
  /// phi(N), the dimension over Q.
  std::size_t degree() const noexcept { return degree_; }
  const UniPoly& modulus() const noexcept { return modulus_; }
  /// Coordinates of zeta_N^j, for any j (reduced mod N first).
  const std::vector<Rational>& power(std::uint64_t exponent) const;

 private:
  std::uint64_t conductor_;
  std::size_t degree_;
  UniPoly modulus_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldHandle = std::shared_ptr<const CyclotomicField>;
FieldHandle make_field(std::uint64_t conductor);

/// Exact element of Q(zeta_N), stored as canonical coordinates over
/// 1, zeta_N, ..., zeta_N^(phi(N)-1). Two elements of the same field are equal
/// iff their coordinates are. Binary operations on different conductors M, N
/// first embed both operands into Q(zeta_lcm(M,N)).
class Cyclotomic {
 public:
  /// Zero of Q(zeta_1) = Q.
  Cyclotomic();
  Cyclotomic(FieldHandle field, std::vector<Rational> coords);

  static Cyclotomic rational(const Rational& q, std::uint64_t conductor = 1);
  static Cyclotomic rational(const Rational& q, FieldHandle field);
  /// zeta_N^exponent
  static Cyclotomic root_of_unity(std::uint64_t conductor, std::uint64_t exponent);
  static Cyclotomic root_of_unity(const FieldHandle& field, std::uint64_t exponent);
  /// Reduces sum_j terms[j] * zeta_N^j for a list of any length.
  static Cyclotomic from_powers(const FieldHandle& field, const std::vector<Rational>& terms);

  std::uint64_t conductor() const noexcept { return field_->conductor(); }
  const FieldHandle& field() const noexcept { return field_; }
  const std::vector<Rational>& coordinates() const noexcept { return coords_; }

  bool is_zero() const;
  /// True when every non-constant coordinate vanishes.
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  /// Injective ring homomorphism Q(zeta_M) -> Q(zeta_N) for M | N.
  Cyclotomic embed(std::uint64_t conductor) const;
  Cyclotomic embed(const FieldHandle& field) const;
  /// Inverse of embed(): the preimage in Q(zeta_M) if this element lies in it.
  std::optional<Cyclotomic> restrict_to(std::uint64_t conductor) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_N. Throws DivisionByZero for zero.
  Cyclotomic inverse() const;

  /// Equality as field elements, after embedding into a common field.
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Same grammar as cyc_from_string, in the element's own conductor.
  std::string to_string() const;

 private:
  FieldHandle field_;
  std::vector<Rational> coords_;
};

/// Exact e-th power; pow(x, 0) == 1.
Cyclotomic cyc_pow(const Cyclotomic& x, std::uint64_t exponent);

/// Parses a signed sum of terms `q`, `q*z^e`, `z^e`, `z`, `q*z` where q is
/// `a` or `a/b` and z denotes zeta_N. Whitespace is ignored.
Cyclotomic cyc_from_string(std::string_view expr, std::uint64_t conductor);

/// Numerical embedding with zeta_N = exp(2 pi i / N). `digits` is the number of
/// significant decimal digits required; at most 18 are supported.
std::complex<long double> cyc_to_complex(const Cyclotomic& x, unsigned digits = 15);

}  // namespace isores
