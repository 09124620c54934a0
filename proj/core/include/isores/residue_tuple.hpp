#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "isores/cyclotomic.hpp"

namespace isores {

using Complex = std::complex<long double>;

/// Residues given through one k-th root each, exactly: R_i = r_i^k.
struct ExactRoots {
  long k = 0;
  std::uint64_t conductor = 1;
  std::vector<Cyclotomic> roots;
};

/// Residues given as complex values, decided against a tolerance.
struct NumericResidues {
  long k = 0;
  std::vector<Complex> values;
  long double tol = 1e-9L;
};

/// A projective tuple [R_1 : ... : R_p] of k-residues, in exact root form or
/// numeric form. Construction rejects zero residues.
class ResidueTuple {
 public:
  /// Roots are embedded into Q(zeta_lcm(N,k)), the working field.
  static ResidueTuple exact(long k, std::uint64_t conductor, std::vector<Cyclotomic> roots);
  static ResidueTuple numeric(long k, std::vector<Complex> values, long double tol);

  long k() const noexcept { return k_; }
  unsigned p() const noexcept { return p_; }
  bool is_exact() const noexcept { return std::holds_alternative<ExactRoots>(data_); }
  /// Working conductor lcm(N, k) in exact mode; 0 in numeric mode.
  std::uint64_t working_conductor() const noexcept { return working_conductor_; }

  /// Requires is_exact().
  const ExactRoots& exact_data() const;
  /// Requires !is_exact().
  const NumericResidues& numeric_data() const;

  /// The k roots of R_i, exactly: zeta_k^j r_i for j = 0..k-1 (exact mode).
  std::vector<Cyclotomic> exact_root_choices(unsigned i) const;
  /// The k roots of R_i numerically, starting from the stored (or principal) root.
  std::vector<Complex> numeric_root_choices(unsigned i) const;

  /// R_i = r_i^k (exact mode).
  Cyclotomic exact_residue(unsigned i) const;
  /// R_i as a complex number in either mode.
  Complex residue_value(unsigned i) const;

 private:
  ResidueTuple() = default;
  long k_ = 0;
  unsigned p_ = 0;
  std::uint64_t working_conductor_ = 0;
  std::variant<ExactRoots, NumericResidues> data_;
};

}  // namespace isores
