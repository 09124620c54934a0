#pragma once

#include <vector>

#include "isores/rational.hpp"

namespace isores {

/// Right-hand side of the f_k split identity
///   f_k(a2, n+1) = sum_{r=0}^{n-1} (-(a1+k))^r [ f_k^(r-1)(a1+a2, n)/(r-1)!
///                                               + (a1+a2+k) f_k^(r)(a1+a2, n)/r! ]
/// for n >= 2.
Rational fk_split_rhs(long k, long n, long a1, long a2);

/// sum_{I subset of {1..p}} (-1)^|I| f_k(c_{1,I} + (|I|-1)k, p+1), which
/// vanishes identically. `b` holds the pole orders.
Rational zero_sum_identity(long k, long a1, const std::vector<long>& b);

}  // namespace isores
