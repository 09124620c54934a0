#include "isores/strata.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "isores/error.hpp"
#include "isores/kcombinatorics.hpp"

namespace isores {

long Signature::pole_sum(SubsetMask subset) const {
  long sum = 0;
  for (unsigned i : subset.indices()) sum += b_.at(i);
  return sum;
}

bool Signature::all_poles_order_k() const {
  for (long bi : b_) {
    if (bi != k_) return false;
  }
  return true;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "(" << k_ << "; " << a1_ << "," << a2_ << "; [";
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << "])";
  return os.str();
}

Signature validate_signature(long k, long a1, long a2, std::vector<long> b) {
  if (k < 2) {
    throw Error(ErrorCode::LevelTooSmall, "k must be >= 2, got " + std::to_string(k));
  }
  if (b.empty()) throw Error(ErrorCode::EmptyPoleList, "at least one pole is required");
  if (b.size() > SubsetMask::kMaxSize) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "at most " + std::to_string(SubsetMask::kMaxSize) + " poles are supported");
  }
  long sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] <= 0 || b[i] % k != 0) {
      throw Error(ErrorCode::PoleOrderNotMultipleOfK,
                  "pole order b_" + std::to_string(i + 1) + " = " + std::to_string(b[i]) +
                      " is not a positive multiple of k = " + std::to_string(k));
    }
    sum += b[i];
  }
  if (a1 + a2 - sum != -2 * k) {
    throw Error(ErrorCode::SumMismatch, "a1 + a2 - sum(b) = " + std::to_string(a1 + a2 - sum) +
                                            ", expected -2k = " + std::to_string(-2 * k));
  }
  if (std::gcd(a1, k) != 1 || std::gcd(a2, k) != 1) {
    throw Error(ErrorCode::ZeroOrderNotCoprime,
                "a1 = " + std::to_string(a1) + " and a2 = " + std::to_string(a2) +
                    " must both be coprime to k = " + std::to_string(k));
  }
  if (a1 <= -k) {
    throw Error(ErrorCode::A1NotGreaterThanMinusK,
                "a1 = " + std::to_string(a1) + " must exceed -k = " + std::to_string(-k));
  }
  return Signature(k, a1, a2, std::move(b));
}

long c_coeff(const Signature& sig, int side, SubsetMask subset) {
  if (side != 1 && side != 2) throw Error(ErrorCode::InvalidArgument, "side must be 1 or 2");
  return sig.a(side) + sig.k() - sig.pole_sum(subset);
}

namespace {

void require_enumerable(const Signature& sig, const Limits& limits) {
  if (sig.p() > limits.max_p) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "p = " + std::to_string(sig.p()) + " exceeds the enumeration bound " +
                    std::to_string(limits.max_p));
  }
}

// sum over I with c_{lead,I} > 0 of c_{lead,I} f_k(a_lead,|I|+1) f_k(a_other,|I^c|+1)
Rational expand_around(const Signature& sig, int lead, const Limits& limits) {
  require_enumerable(sig, limits);
  const unsigned p = sig.p();
  const long k = sig.k();
  const long a_lead = sig.a(lead);
  const long a_other = sig.a(3 - lead);
  std::vector<Rational> f_lead(p + 2);
  std::vector<Rational> f_other(p + 2);
  for (unsigned m = 1; m <= p + 1; ++m) {
    f_lead[m] = partial_product(k, a_lead, m);
    f_other[m] = partial_product(k, a_other, m);
  }
  Rational total;
  const std::uint64_t count = std::uint64_t{1} << p;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask subset(bits);
    const long c = a_lead + k - sig.pole_sum(subset);
    if (c <= 0) continue;
    const unsigned size = subset.size();
    total += Rational(c) * f_lead[size + 1] * f_other[p - size + 1];
  }
  return total;
}

}  // namespace

BigInt degree_generic(const Signature& sig, const Limits& limits) {
  const Rational d = expand_around(sig, 1, limits);
  if (!d.is_integer() || d.sign() < 0) {
    throw InternalError(InternalCode::NonIntegerResult,
                        "degree of " + sig.to_string() + " evaluated to " + d.to_string());
  }
  return d.to_integer();
}

Rational degree_generic_swapped(const Signature& sig, const Limits& limits) {
  return expand_around(sig, 2, limits);
}

namespace {

void require_order_k_poles(const Signature& sig) {
  if (!sig.all_poles_order_k()) {
    throw Error(ErrorCode::PreconditionViolation,
                "closed form needs every pole of order -k: " + sig.to_string());
  }
  if (sig.a2() <= -sig.k()) {
    throw Error(ErrorCode::PreconditionViolation,
                "closed form needs a2 > -k: " + sig.to_string());
  }
}

}  // namespace

BigInt degree_order_k_poles(const Signature& sig) {
  require_order_k_poles(sig);
  const long k = sig.k();
  return binomial(static_cast<long>(sig.p()) - 1, ceil_div(sig.a1(), k)) *
         k_factorial(k, sig.a1()) * k_factorial(k, sig.a2());
}

long double gamma_degree_estimate(const Signature& sig) {
  require_order_k_poles(sig);
  const long k = sig.k();
  const long double kk = static_cast<long double>(k);
  const long double alpha1 = static_cast<long double>(sig.a1() + k) / kk;
  const long double alpha2 = static_cast<long double>(sig.a2() + k) / kk;
  const long double binom =
      Rational(binomial(static_cast<long>(sig.p()) - 1, ceil_div(sig.a1(), k))).to_long_double();
  constexpr long double pi = std::numbers::pi_v<long double>;
  return std::pow(kk, static_cast<long double>(sig.p() - 1)) * binom *
         std::fabs(std::sin(alpha1 * pi)) / pi * std::tgamma(alpha1) * std::tgamma(alpha2);
}

}  // namespace isores
