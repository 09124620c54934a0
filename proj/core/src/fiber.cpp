#include "isores/fiber.hpp"

#include <string>

#include "isores/error.hpp"
#include "isores/kcombinatorics.hpp"

namespace isores {

std::string ResonantPartition::to_string() const {
  std::string out = "J0=" + j0.to_string();
  for (const auto& block : blocks) out += " | " + block.to_string();
  return out;
}

namespace {

SubsetMask union_of(const std::vector<SubsetMask>& blocks, SubsetMask chosen) {
  SubsetMask u;
  for (unsigned j : chosen.indices()) u = u | blocks.at(j);
  return u;
}

std::vector<long> poles_of(const Signature& sig, SubsetMask subset) {
  std::vector<long> out;
  for (unsigned i : subset.indices()) out.push_back(sig.b()[i]);
  return out;
}

void require_partition(const Signature& sig, SubsetMask j0, const std::vector<SubsetMask>& blocks) {
  SubsetMask covered = j0;
  for (const auto& block : blocks) {
    if (block.empty() || !covered.disjoint(block)) {
      throw Error(ErrorCode::PreconditionViolation,
                  "blocks must be nonempty and pairwise disjoint from each other and J0");
    }
    covered = covered | block;
  }
  if (covered != SubsetMask::full(sig.p())) {
    throw Error(ErrorCode::PreconditionViolation, "J0 and the blocks must cover {1..p}");
  }
  if (blocks.size() > SubsetMask::kMaxSize) {
    throw Error(ErrorCode::EnumerationBoundExceeded, "too many blocks");
  }
}

}  // namespace

long block_coeff(const Signature& sig, int side, const std::vector<SubsetMask>& blocks,
                 SubsetMask chosen) {
  return c_coeff(sig, side, union_of(blocks, chosen));
}

Signature reduced_signature(const Signature& sig, SubsetMask j0,
                            const std::vector<SubsetMask>& blocks, SubsetMask chosen) {
  const auto s = static_cast<unsigned>(blocks.size());
  const long d1 = block_coeff(sig, 1, blocks, chosen);
  const long d2 = block_coeff(sig, 2, blocks, chosen.complement(s));
  if (d1 <= 0 || d2 <= 0 || j0.empty()) {
    throw Error(ErrorCode::PreconditionViolation,
                "reduced signature needs d_1 > 0, d_2 > 0 and a nonempty J0 (d_1 = " +
                    std::to_string(d1) + ", d_2 = " + std::to_string(d2) + ")");
  }
  return validate_signature(sig.k(), d1 - sig.k(), d2 - sig.k(), poles_of(sig, j0));
}

Rational g_coefficient(const Signature& sig, SubsetMask j0, const std::vector<SubsetMask>& blocks,
                       const Limits& limits) {
  require_partition(sig, j0, blocks);
  // The s = 0 coefficient is the degree itself; the displayed guard
  // d_{2,empty} > 0 would drop it when a2 < -k.
  if (blocks.empty()) return Rational(degree_generic(sig, limits));

  const auto s = static_cast<unsigned>(blocks.size());
  const long k = sig.k();
  const Rational base1(sig.a1() + k);
  const Rational base2(sig.a2() + k);
  Rational total;
  const std::uint64_t count = std::uint64_t{1} << s;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask chosen(bits);
    const SubsetMask rest = chosen.complement(s);
    const long d1 = block_coeff(sig, 1, blocks, chosen);
    if (d1 <= 0) continue;
    const Rational weight = base1.pow(static_cast<long>(chosen.size()) - 1) *
                            base2.pow(static_cast<long>(rest.size()) - 1);
    if (j0.empty()) {
      total += Rational(d1) * weight;
      continue;
    }
    const long d2 = block_coeff(sig, 2, blocks, rest);
    if (d2 <= 0) continue;
    const BigInt reduced = degree_generic(reduced_signature(sig, j0, blocks, chosen), limits);
    total += Rational(d1) * Rational(d2) * Rational(reduced) * weight;
  }
  return total;
}

Rational block_factor(const Signature& sig, SubsetMask block) {
  return abelian_f(sig.pole_sum(block) / sig.k() - 1, static_cast<long>(block.size()) + 1);
}

std::vector<ResonantPartition> resonant_partitions(unsigned p, const ResonanceProfile& profile) {
  const SubsetMask full = SubsetMask::full(p);
  std::vector<ResonantPartition> out;
  out.push_back({full, {}});
  std::vector<SubsetMask> blocks;
  // Blocks are appended in increasing order of their smallest index, so each
  // unordered collection is produced exactly once.
  auto extend = [&](auto& self, SubsetMask used) -> void {
    for (const auto& r : profile.resonant) {
      if (!r.mask.subset_of(full) || !r.mask.disjoint(used)) continue;
      if (!blocks.empty() && r.mask.min() <= blocks.back().min()) continue;
      blocks.push_back(r.mask);
      const SubsetMask now = used | r.mask;
      out.push_back({now.complement(p), blocks});
      self(self, now);
      blocks.pop_back();
    }
  };
  extend(extend, SubsetMask());
  return out;
}

FiberReport fiber_count(const Signature& sig, const ResidueTuple& rt, const Limits& limits) {
  if (rt.k() != sig.k()) {
    throw Error(ErrorCode::LevelMismatch, "residue tuple has k = " + std::to_string(rt.k()) +
                                              ", signature has k = " + std::to_string(sig.k()));
  }
  if (rt.p() != sig.p()) {
    throw Error(ErrorCode::PreconditionViolation,
                "residue tuple has " + std::to_string(rt.p()) + " entries, signature has " +
                    std::to_string(sig.p()) + " poles");
  }
  return fiber_count(sig, resonant_subsets(rt, limits), limits);
}

FiberReport fiber_count(const Signature& sig, const ResonanceProfile& profile,
                        const Limits& limits) {
  FiberReport report;
  report.degree = degree_generic(sig, limits);

  Rational total;
  for (auto& partition : resonant_partitions(sig.p(), profile)) {
    Rational contribution;
    if (partition.blocks.empty()) {
      contribution = Rational(report.degree);
    } else {
      contribution = g_coefficient(sig, partition.j0, partition.blocks, limits);
      for (const auto& block : partition.blocks) {
        contribution *= block_factor(sig, block) *
                        Rational(BigInt(static_cast<unsigned long>(profile.abelian_number(block))));
      }
      if (partition.blocks.size() % 2 == 1) contribution = -contribution;
    }
    total += contribution;
    report.terms.push_back({std::move(partition), contribution});
  }

  if (!total.is_integer() || total.sign() < 0) {
    throw InternalError(InternalCode::IntegralityFailure,
                        "fiber cardinality for " + sig.to_string() + " evaluated to " +
                            total.to_string());
  }
  report.count = total.to_integer();

  const bool pole_like_a2 = sig.a2() < -sig.k();
  report.unverified_regime = pole_like_a2 && profile.resonant.size() >= 2;
  if (report.unverified_regime) {
    report.diagnostics.push_back(
        "a2 < -k with several resonant subsets: partition sum computed as displayed, "
        "not independently confirmed");
  }
  if (profile.resonant.size() == 1) {
    const auto& only = profile.resonant.front();
    const BigInt single = fiber_count_single(sig, only.mask, only.abelian_number, limits);
    report.single_resonance_count = single;
    if (single != report.count) {
      report.diagnostics.push_back("single-resonance formula gives " + to_string(single) +
                                   " but the partition sum gives " + to_string(report.count) +
                                   " for resonant subset " + only.mask.to_string());
    }
  }
  if (report.count > report.degree) {
    report.diagnostics.push_back("fiber count " + to_string(report.count) +
                                 " exceeds the generic degree " + to_string(report.degree));
  }
  if (profile.numeric && profile.ambiguous) {
    report.diagnostics.push_back(
        "numeric mode: some root sum modulus lies in [tol, 10 tol); resonance decisions are "
        "tolerance-sensitive");
  }
  return report;
}

BigInt fiber_count_single(const Signature& sig, SubsetMask subset, std::uint64_t ab,
                          const Limits& limits) {
  const unsigned p = sig.p();
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "resonant subset must be nonempty");
  if (!subset.subset_of(SubsetMask::full(p))) {
    throw Error(ErrorCode::SubsetOutOfRange, "subset " + subset.to_string() + " exceeds {1..p}");
  }
  const BigInt degree = degree_generic(sig, limits);
  const Rational removed_unit = block_factor(sig, subset) * Rational(BigInt(static_cast<unsigned long>(ab)));
  if (subset == SubsetMask::full(p)) {
    return (Rational(degree) - removed_unit).to_integer();
  }
  const long k = sig.k();
  const SubsetMask rest = subset.complement(p);
  Rational bracket;
  if (const long c1 = c_coeff(sig, 1, subset); c1 > 0) {
    const Signature lower = validate_signature(k, c1 - k, sig.a2(), poles_of(sig, rest));
    bracket += Rational(c1) * Rational(degree_generic(lower, limits));
  }
  if (const long c2 = c_coeff(sig, 2, subset); c2 > 0) {
    const Signature lower = validate_signature(k, sig.a1(), c2 - k, poles_of(sig, rest));
    bracket += Rational(c2) * Rational(degree_generic(lower, limits));
  }
  return (Rational(degree) - bracket * removed_unit).to_integer();
}

}  // namespace isores
