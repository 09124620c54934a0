#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace isores {

/// Subset of {0, ..., p-1} (pole indices, zero-based internally;
/// rendered one-based). p <= 63.
class SubsetMask {
 public:
  static constexpr unsigned kMaxSize = 63;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  /// All of {0..p-1}.
  static SubsetMask full(unsigned p);
  /// From zero-based indices.
  static SubsetMask of(const std::vector<unsigned>& indices);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(unsigned i) const noexcept { return (bits_ >> i) & 1U; }
  /// Index of the smallest member; requires !empty().
  constexpr unsigned min() const noexcept { return static_cast<unsigned>(std::countr_zero(bits_)); }

  constexpr bool disjoint(SubsetMask other) const noexcept { return (bits_ & other.bits_) == 0; }
  constexpr bool subset_of(SubsetMask other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  constexpr SubsetMask operator|(SubsetMask o) const noexcept { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const noexcept { return SubsetMask(bits_ & o.bits_); }
  /// Complement within {0..p-1}.
  SubsetMask complement(unsigned p) const;

  /// Zero-based members in increasing order.
  std::vector<unsigned> indices() const;
  /// One-based members, e.g. "{1,2}".
  std::string to_string() const;

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Enumeration limits shared by every exponential loop.
struct Limits {
  /// Largest pole count accepted by subset enumeration.
  unsigned max_p = 16;
  /// Largest number of root tuples a single enumeration may visit.
  std::uint64_t tuple_budget = 100'000'000;

  /// Defaults, with max_p overridden by the ISORES_MAX_P environment variable
  /// when it is set. Throws InvalidArgument unless the value is in [1, 63].
  static Limits from_environment();
};

}  // namespace isores
