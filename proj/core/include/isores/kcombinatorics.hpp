#pragma once

#include "isores/rational.hpp"
#include "isores/unipoly.hpp"

namespace isores {

/// The (k,m)-partial product of a:
///   1/(a+k)                      if m == 1
///   1                            if m == 2
///   prod_{0 <= j <= m-3} (a-kj)  if m >= 3
/// Defined for negative a as well. Throws PartialProductPole for m == 1 and
/// a == -k.
Rational partial_product(long k, long a, long m);

/// a(a-k)(a-2k)... down to the last positive factor; 1 when a <= 0.
BigInt k_factorial(long k, long a);

/// partial_product with k = 1.
Rational abelian_f(long a, long p);

/// f_k(., m) as a polynomial in a, for m >= 2. Derivatives of any order come
/// from UniPoly::derivative; orders above m-2 vanish.
UniPoly fk_as_polynomial(long k, long m);

/// r-th derivative of f_k(., m) evaluated at a, with the convention that it
/// is zero for r < 0 or r > m-2. Requires m >= 2.
Rational fk_derivative(long k, long m, long r, long a);

/// Zero for r < 0, r > n or n < 0.
BigInt binomial(long n, long r);

BigInt factorial(long n);

/// Ceiling division for any signs, b > 0.
long ceil_div(long a, long b);

}  // namespace isores
