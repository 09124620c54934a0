#include "isores/identities.hpp"

#include <cstdint>

#include "isores/error.hpp"
#include "isores/kcombinatorics.hpp"

namespace isores {

Rational fk_split_rhs(long k, long n, long a1, long a2) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "split identity needs n >= 2");
  const UniPoly f = fk_as_polynomial(k, n);
  const Rational at(a1 + a2);
  // derivative(r) / r! evaluated at a1 + a2; zero outside 0 <= r <= n-2.
  auto scaled = [&](long r) -> Rational {
    if (r < 0 || r > n - 2) return Rational();
    return f.derivative(static_cast<unsigned>(r)).evaluate(at) / Rational(factorial(r));
  };
  const Rational step(-(a1 + k));
  Rational total;
  Rational power(1);
  for (long r = 0; r <= n - 1; ++r) {
    total += power * (scaled(r - 1) + Rational(a1 + a2 + k) * scaled(r));
    power *= step;
  }
  return total;
}

Rational zero_sum_identity(long k, long a1, const std::vector<long>& b) {
  const auto p = static_cast<unsigned>(b.size());
  if (p > 30) throw Error(ErrorCode::EnumerationBoundExceeded, "too many poles");
  Rational total;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
    long c = a1 + k;
    long size = 0;
    for (unsigned i = 0; i < p; ++i) {
      if ((bits >> i) & 1U) {
        c -= b[i];
        ++size;
      }
    }
    const Rational term = partial_product(k, c + (size - 1) * k, static_cast<long>(p) + 1);
    total += size % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace isores
