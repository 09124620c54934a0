#pragma once

// Reference computations for the test suites. Nothing here calls into the
// library: arithmetic is plain gmpxx or int64, and cyclotomic polynomials come
// from the Moebius product formula rather than repeated division.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using IntPoly = std::vector<long long>;  // coefficient i multiplies x^i

int mobius(long n);

/// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}.
IntPoly cyclotomic_mobius(long n);

/// Remainder of p modulo a monic divisor.
IntPoly reduce_monic(IntPoly p, const IntPoly& divisor);

/// Element of Z[zeta_M] as coefficients of zeta_M^0 .. zeta_M^(M-1), not reduced.
struct IntCyclotomic {
  long conductor = 1;
  std::vector<long long> coeffs;  // size == conductor

  bool is_zero() const;
  /// Multiplication by zeta_M^shift.
  IntCyclotomic rotated(long shift) const;
  IntCyclotomic& operator+=(const IntCyclotomic& rhs);
};

/// Number of (j_1, ..., j_m) in [0,k)^m with sum_i zeta_k^{j_i} r_i == 0, with
/// every root already written in Q(zeta_M), k | M.
std::uint64_t unsliced_zero_sums(long k, const std::vector<IntCyclotomic>& roots);

/// f_k(a, m) from its definition.
mpq_class fk(long k, long a, long m);

/// r-th Taylor coefficient of f_k(., m) at x0, i.e. f_k^(r)(x0, m)/r!, as the
/// t^r coefficient of prod_{j=0}^{m-3} (x0 - kj + t). Zero for r < 0.
mpz_class fk_taylor(long k, long m, long r, long x0);

/// a(a-k)(a-2k)... over the positive factors.
mpz_class k_factorial(long k, long a);

/// sum_{I: c_{side,I} > 0} c_{side,I} f_k(a_side, |I|+1) f_k(a_other, |I^c|+1).
mpq_class degree_sum(long k, long a_side, long a_other, const std::vector<long>& b);

}  // namespace oracle
