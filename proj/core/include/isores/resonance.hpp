#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "isores/residue_tuple.hpp"
#include "isores/subset_mask.hpp"

namespace isores {

/// Outcome of a resonance decision. `ambiguous` is only ever set in numeric
/// mode, when some sum modulus falls in [tol, 10 tol).
struct ResonanceTest {
  bool resonant = false;
  bool ambiguous = false;
};

/// Decides whether some choice of k-th roots over I sums to zero. The root of
/// the first index is held fixed, since multiplying a whole tuple by a k-th
/// root of unity preserves a zero sum.
ResonanceTest test_resonance(const ResidueTuple& rt, SubsetMask subset,
                             const Limits& limits = {});
bool is_resonant(const ResidueTuple& rt, SubsetMask subset, const Limits& limits = {});

/// Number of zero-sum root tuples over I modulo C^*: zero-sum completions
/// with the root of the first index fixed.
std::uint64_t abelian_number(const ResidueTuple& rt, SubsetMask subset,
                             const Limits& limits = {});

struct ResonantSubset {
  SubsetMask mask;
  std::uint64_t abelian_number = 0;
  friend bool operator==(const ResonantSubset&, const ResonantSubset&) = default;
};

struct ResonanceProfile {
  /// Sorted by mask; never contains singletons.
  std::vector<ResonantSubset> resonant;
  bool numeric = false;
  long double tolerance = 0;
  bool ambiguous = false;

  /// Zero when the mask is absent.
  std::uint64_t abelian_number(SubsetMask mask) const;
};

/// All resonant I with |I| >= 2 and their abelian numbers.
ResonanceProfile resonant_subsets(const ResidueTuple& rt, const Limits& limits = {});

/// The product of (r_{i_1} + ... + r_{i_d}) over all k^d root tuples. Exact
/// tuples give a Cyclotomic, numeric tuples a complex value.
using ResonanceValue = std::variant<Cyclotomic, Complex>;
ResonanceValue eval_resonance_polynomial(const ResidueTuple& rt, SubsetMask subset,
                                         const Limits& limits = {});

struct SystoleReport {
  long double value = 0;
  /// Where the minimum is first attained.
  SubsetMask subset;
  bool numeric = false;
  bool ambiguous = false;
};

/// Minimum modulus of a nonzero sum of k-th roots over a nonempty subset.
/// Sums are formed exactly in exact mode; only the modulus is floated.
SystoleReport residual_systole(const ResidueTuple& rt, const Limits& limits = {});

}  // namespace isores
