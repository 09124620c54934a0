#include "isores/kcombinatorics.hpp"

#include <string>

#include "isores/error.hpp"

namespace isores {

namespace {

void require_level(long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1, got " + std::to_string(k));
}

}  // namespace

long ceil_div(long a, long b) {
  const long q = a / b;
  const long r = a % b;
  return (r != 0 && ((r > 0) == (b > 0))) ? q + 1 : q;
}

Rational partial_product(long k, long a, long m) {
  require_level(k);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1, got " + std::to_string(m));
  if (m == 1) {
    if (a == -k) {
      throw Error(ErrorCode::PartialProductPole,
                  "f_k(a, 1) = 1/(a+k) has a pole at a = -k = " + std::to_string(a));
    }
    return Rational(BigInt(1), BigInt(a + k));
  }
  BigInt acc = 1;
  for (long j = 0; j <= m - 3; ++j) acc *= a - k * j;
  return Rational(acc);
}

BigInt k_factorial(long k, long a) {
  require_level(k);
  BigInt acc = 1;
  for (long factor = a; factor > 0; factor -= k) acc *= factor;
  return acc;
}

Rational abelian_f(long a, long p) { return partial_product(1, a, p); }

UniPoly fk_as_polynomial(long k, long m) {
  require_level(k);
  if (m < 2) {
    throw Error(ErrorCode::InvalidArgument, "f_k(., m) is polynomial only for m >= 2");
  }
  UniPoly acc = UniPoly::constant(Rational(1));
  for (long j = 0; j <= m - 3; ++j) acc = acc * UniPoly::linear_root(Rational(k * j));
  return acc;
}

Rational fk_derivative(long k, long m, long r, long a) {
  if (r < 0 || r > m - 2) return Rational();
  return fk_as_polynomial(k, m).derivative(static_cast<unsigned>(r)).evaluate(Rational(a));
}

BigInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace isores
