#include "isores/unipoly.hpp"

#include <sstream>

#include "isores/error.hpp"

namespace isores {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear_root(const Rational& root) { return UniPoly({-root, Rational(1)}); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative(unsigned order) const {
  if (order == 0) return *this;
  if (coeffs_.size() <= order) return UniPoly();
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    // i (i-1) ... (i-order+1)
    BigInt falling = 1;
    for (std::size_t j = 0; j < order; ++j) falling *= static_cast<unsigned long>(i - j);
    out[i - order] = coeffs_[i] * Rational(falling);
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return UniPoly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {UniPoly(), *this};

  std::vector<Rational> rem = coeffs_;
  const std::size_t dsize = divisor.coeffs_.size();
  std::vector<Rational> quot(rem.size() - dsize + 1);
  const Rational lead = divisor.leading();
  for (std::size_t i = rem.size(); i-- >= dsize;) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] / lead;
    const std::size_t shift = i - (dsize - 1);
    quot[shift] = q;
    for (std::size_t j = 0; j < dsize; ++j) rem[shift + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dsize - 1);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << variable;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace isores
