#include "isores/rational.hpp"

#include <cctype>
#include <cmath>

#include "isores/error.hpp"

namespace isores {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorCode::SyntaxError, "not an integer literal: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '+' || den.front() == '-')) {
    throw Error(ErrorCode::SyntaxError, "signed denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(den));
}

BigInt Rational::to_integer() const {
  if (!is_integer()) {
    throw InternalError(InternalCode::NonIntegerResult, "expected an integer, got " + to_string());
  }
  return value_.get_num();
}

long double Rational::to_long_double() const {
  // mpq_get_d is limited to double; split num/den exponents for wide values.
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, value_.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, value_.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(num) / static_cast<long double>(den),
                    static_cast<int>(num_exp - den_exp));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_short_string() const {
  return is_integer() ? value_.get_num().get_str() : to_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace isores
