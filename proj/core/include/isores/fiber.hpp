#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isores/rational.hpp"
#include "isores/resonance.hpp"
#include "isores/strata.hpp"

namespace isores {

/// {1..p} = J0 ⊔ J1 ⊔ ... ⊔ Js with every Jj (j >= 1) resonant. Blocks are
/// kept sorted by their smallest index.
struct ResonantPartition {
  SubsetMask j0;
  std::vector<SubsetMask> blocks;

  /// e.g. "J0={3} | {1,2}"
  std::string to_string() const;
  friend bool operator==(const ResonantPartition&, const ResonantPartition&) = default;
};

struct FiberTerm {
  ResonantPartition partition;
  Rational contribution;
};

struct FiberReport {
  BigInt count;
  /// Degree of the cover; the contribution of the s = 0 partition.
  BigInt degree;
  std::vector<FiberTerm> terms;
  /// a2 < -k with two or more resonant subsets: computed as displayed, not
  /// independently confirmed.
  bool unverified_regime = false;
  /// Present when exactly one subset is resonant.
  std::optional<BigInt> single_resonance_count;
  /// Disagreements and flagged observations; empty on a clean run.
  std::vector<std::string> diagnostics;
};

/// d_{side,I} = c_{side, union of the blocks selected by `chosen`}.
long block_coeff(const Signature& sig, int side, const std::vector<SubsetMask>& blocks,
                 SubsetMask chosen);

/// (d_{1,I} - k, d_{2,I^c} - k, {-b_i : i in J0}). Requires both d > 0 and a
/// nonempty J0.
Signature reduced_signature(const Signature& sig, SubsetMask j0,
                            const std::vector<SubsetMask>& blocks, SubsetMask chosen);

/// G_k(J0; J1, ..., Js), exactly.
Rational g_coefficient(const Signature& sig, SubsetMask j0, const std::vector<SubsetMask>& blocks,
                       const Limits& limits = {});

/// f_J = f(B_J/k - 1, |J| + 1).
Rational block_factor(const Signature& sig, SubsetMask block);

/// Every resonant partition, with the s = 0 partition first.
std::vector<ResonantPartition> resonant_partitions(unsigned p, const ResonanceProfile& profile);

/// Cardinality of the isoresidual fiber over rt, with the per-partition ledger.
FiberReport fiber_count(const Signature& sig, const ResidueTuple& rt, const Limits& limits = {});
/// Same, from a precomputed profile.
FiberReport fiber_count(const Signature& sig, const ResonanceProfile& profile,
                        const Limits& limits = {});

/// Fiber cardinality when exactly the resonance equation of I holds, with
/// abelian number `ab`.
BigInt fiber_count_single(const Signature& sig, SubsetMask subset, std::uint64_t ab,
                          const Limits& limits = {});

}  // namespace isores
