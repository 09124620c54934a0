#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isores/subset_mask.hpp"

namespace isores::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  /// First failure, or empty.
  std::string detail;
};

/// Identity grids, symmetry checks and the worked-example regressions.
/// Deterministic: every random corpus uses a fixed seed.
std::vector<CheckResult> run_selfcheck(const Limits& limits = {});

}  // namespace isores::cli
