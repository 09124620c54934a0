#include "isores/subset_mask.hpp"

#include <cstdlib>
#include <string>

#include "isores/error.hpp"

namespace isores {

SubsetMask SubsetMask::full(unsigned p) {
  if (p > kMaxSize) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "at most " + std::to_string(kMaxSize) + " poles are supported");
  }
  return SubsetMask(p == 0 ? 0 : (~std::uint64_t{0} >> (64 - p)));
}

SubsetMask SubsetMask::of(const std::vector<unsigned>& indices) {
  std::uint64_t bits = 0;
  for (unsigned i : indices) {
    if (i >= kMaxSize) throw Error(ErrorCode::SubsetOutOfRange, "index out of range");
    bits |= std::uint64_t{1} << i;
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::complement(unsigned p) const {
  return SubsetMask(full(p).bits() & ~bits_);
}

std::vector<unsigned> SubsetMask::indices() const {
  std::vector<unsigned> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<unsigned>(std::countr_zero(rest)));
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (unsigned i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("ISORES_MAX_P")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1 ||
        value > static_cast<long>(SubsetMask::kMaxSize)) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("ISORES_MAX_P must be an integer in [1, 63], got '") + env + "'");
    }
    limits.max_p = static_cast<unsigned>(value);
  }
  return limits;
}

}  // namespace isores
