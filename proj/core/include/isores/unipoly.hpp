#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "isores/rational.hpp"

namespace isores {

/// Univariate polynomial over the rationals; coefficient i multiplies x^i.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// c * x^power
  static UniPoly monomial(const Rational& c, std::size_t power);
  /// x - root
  static UniPoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  Rational coefficient(std::size_t power) const;
  Rational leading() const;

  Rational evaluate(const Rational& x) const;
  /// Formal derivative of the given order; order 0 is the identity.
  UniPoly derivative(unsigned order = 1) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// e.g. "x^2 - 2*x"
  std::string to_string(char variable = 'x') const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << p.to_string();
  }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace isores
