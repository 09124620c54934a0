#include "isores/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isores/error.hpp"

namespace isores {

namespace {

using Coords = std::vector<Rational>;

void require_subset(const ResidueTuple& rt, SubsetMask subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "subset must be nonempty");
  if (!subset.subset_of(SubsetMask::full(rt.p()))) {
    throw Error(ErrorCode::SubsetOutOfRange, "subset " + subset.to_string() +
                                                 " is not contained in {1.." +
                                                 std::to_string(rt.p()) + "}");
  }
}

// k^exponent, saturating at the budget + 1.
std::uint64_t bounded_power(long k, unsigned exponent, std::uint64_t budget) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    acc *= static_cast<std::uint64_t>(k);
    if (acc > budget) return budget + 1;
  }
  return acc;
}

void require_budget(std::uint64_t cost, const Limits& limits, const char* what) {
  if (cost > limits.tuple_budget) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                std::string(what) + " would visit more than " +
                    std::to_string(limits.tuple_budget) + " root tuples");
  }
}

// Coordinates of every k-th root of every selected residue, in the working field.
struct ExactTable {
  std::size_t dim = 0;
  std::vector<std::vector<Coords>> roots;  // roots[slot][choice]
};

ExactTable exact_table(const ResidueTuple& rt, const std::vector<unsigned>& indices) {
  ExactTable table;
  table.dim = make_field(rt.working_conductor())->degree();
  for (unsigned i : indices) {
    std::vector<Coords> choices;
    for (const auto& r : rt.exact_root_choices(i)) choices.push_back(r.coordinates());
    table.roots.push_back(std::move(choices));
  }
  return table;
}

std::vector<std::vector<Complex>> numeric_table(const ResidueTuple& rt,
                                                const std::vector<unsigned>& indices) {
  std::vector<std::vector<Complex>> table;
  for (unsigned i : indices) table.push_back(rt.numeric_root_choices(i));
  return table;
}

void add_into(Coords& out, const Coords& a, const Coords& b) {
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = a[t] + b[t];
}

bool sum_is_zero(const Coords& a, const Coords& b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] != -b[t]) return false;
  }
  return true;
}

// Zero-sum completions with slot 0 fixed to its first root.
struct SliceCount {
  std::uint64_t zeros = 0;
  bool ambiguous = false;
};

SliceCount count_slice_exact(const ExactTable& table, bool stop_at_first) {
  SliceCount result;
  const std::size_t d = table.roots.size();
  if (d == 1) return result;
  const std::size_t k = table.roots[0].size();
  std::vector<Coords> partial(d, Coords(table.dim));
  partial[1] = table.roots[0][0];

  auto recurse = [&](auto& self, std::size_t depth) -> bool {
    const auto& choices = table.roots[depth];
    for (std::size_t j = 0; j < k; ++j) {
      if (depth + 1 == d) {
        if (sum_is_zero(partial[depth], choices[j])) {
          ++result.zeros;
          if (stop_at_first) return true;
        }
      } else {
        add_into(partial[depth + 1], partial[depth], choices[j]);
        if (self(self, depth + 1)) return true;
      }
    }
    return false;
  };
  recurse(recurse, 1);
  return result;
}

SliceCount count_slice_numeric(const std::vector<std::vector<Complex>>& table, long double tol,
                               bool stop_at_first) {
  SliceCount result;
  const std::size_t d = table.size();
  if (d == 1) {
    const long double m = std::abs(table[0][0]);
    result.ambiguous = m >= tol && m < 10 * tol;
    return result;
  }
  const std::size_t k = table[0].size();
  auto recurse = [&](auto& self, std::size_t depth, Complex partial) -> bool {
    for (std::size_t j = 0; j < k; ++j) {
      const Complex next = partial + table[depth][j];
      if (depth + 1 == d) {
        const long double m = std::abs(next);
        if (m < tol) {
          ++result.zeros;
          if (stop_at_first) return true;
        } else if (m < 10 * tol) {
          result.ambiguous = true;
        }
      } else if (self(self, depth + 1, next)) {
        return true;
      }
    }
    return false;
  };
  recurse(recurse, 1, table[0][0]);
  return result;
}

SliceCount count_slice(const ResidueTuple& rt, SubsetMask subset, const Limits& limits,
                       bool stop_at_first) {
  require_subset(rt, subset);
  require_budget(bounded_power(rt.k(), subset.size() - 1, limits.tuple_budget), limits,
                 "resonance test");
  const auto indices = subset.indices();
  if (rt.is_exact()) return count_slice_exact(exact_table(rt, indices), stop_at_first);
  return count_slice_numeric(numeric_table(rt, indices), rt.numeric_data().tol, stop_at_first);
}

}  // namespace

ResonanceTest test_resonance(const ResidueTuple& rt, SubsetMask subset, const Limits& limits) {
  const SliceCount c = count_slice(rt, subset, limits, /*stop_at_first=*/true);
  return {c.zeros > 0, c.ambiguous};
}

bool is_resonant(const ResidueTuple& rt, SubsetMask subset, const Limits& limits) {
  return test_resonance(rt, subset, limits).resonant;
}

std::uint64_t abelian_number(const ResidueTuple& rt, SubsetMask subset, const Limits& limits) {
  return count_slice(rt, subset, limits, /*stop_at_first=*/false).zeros;
}

std::uint64_t ResonanceProfile::abelian_number(SubsetMask mask) const {
  auto it = std::lower_bound(resonant.begin(), resonant.end(), mask,
                             [](const ResonantSubset& r, SubsetMask m) { return r.mask < m; });
  return (it != resonant.end() && it->mask == mask) ? it->abelian_number : 0;
}

ResonanceProfile resonant_subsets(const ResidueTuple& rt, const Limits& limits) {
  const unsigned p = rt.p();
  if (p > limits.max_p) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "p = " + std::to_string(p) + " exceeds the enumeration bound " +
                    std::to_string(limits.max_p));
  }
  require_budget(bounded_power(rt.k(), p - 1, limits.tuple_budget), limits, "resonance profile");

  ResonanceProfile profile;
  profile.numeric = !rt.is_exact();
  if (profile.numeric) profile.tolerance = rt.numeric_data().tol;

  const std::uint64_t count = std::uint64_t{1} << p;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const SubsetMask subset(bits);
    if (subset.size() < 2) continue;
    const SliceCount c = count_slice(rt, subset, limits, /*stop_at_first=*/false);
    profile.ambiguous = profile.ambiguous || c.ambiguous;
    if (c.zeros > 0) profile.resonant.push_back({subset, c.zeros});
  }
  return profile;
}

ResonanceValue eval_resonance_polynomial(const ResidueTuple& rt, SubsetMask subset,
                                         const Limits& limits) {
  require_subset(rt, subset);
  require_budget(bounded_power(rt.k(), subset.size(), limits.tuple_budget), limits,
                 "resonance polynomial");
  const auto indices = subset.indices();
  const std::size_t d = indices.size();
  const auto k = static_cast<std::size_t>(rt.k());
  std::vector<std::size_t> digit(d, 0);

  // Odometer over all k^d tuples.
  auto advance = [&]() {
    for (std::size_t s = 0; s < d; ++s) {
      if (++digit[s] < k) return true;
      digit[s] = 0;
    }
    return false;
  };

  if (rt.is_exact()) {
    std::vector<std::vector<Cyclotomic>> choices;
    for (unsigned i : indices) choices.push_back(rt.exact_root_choices(i));
    const auto& field = choices[0][0].field();
    Cyclotomic product = Cyclotomic::rational(Rational(1), field);
    do {
      Cyclotomic sum = Cyclotomic::rational(Rational(), field);
      for (std::size_t s = 0; s < d; ++s) sum += choices[s][digit[s]];
      product *= sum;
      if (product.is_zero()) return product;
    } while (advance());
    return product;
  }

  const auto table = numeric_table(rt, indices);
  Complex product{1.0L, 0.0L};
  do {
    Complex sum{0.0L, 0.0L};
    for (std::size_t s = 0; s < d; ++s) sum += table[s][digit[s]];
    product *= sum;
  } while (advance());
  return product;
}

SystoleReport residual_systole(const ResidueTuple& rt, const Limits& limits) {
  const unsigned p = rt.p();
  if (p > limits.max_p) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "p = " + std::to_string(p) + " exceeds the enumeration bound " +
                    std::to_string(limits.max_p));
  }
  // Sliced cost: sum over nonempty I of k^(|I|-1) <= (k+1)^p.
  require_budget(bounded_power(rt.k() + 1, p, limits.tuple_budget), limits, "residual systole");

  std::vector<unsigned> all(p);
  for (unsigned i = 0; i < p; ++i) all[i] = i;
  const auto k = static_cast<std::size_t>(rt.k());

  SystoleReport report;
  report.numeric = !rt.is_exact();
  report.value = std::numeric_limits<long double>::infinity();
  std::uint64_t chosen = 0;

  if (rt.is_exact()) {
    const ExactTable table = exact_table(rt, all);
    std::vector<Complex> basis(table.dim);
    for (std::size_t t = 0; t < table.dim; ++t) {
      basis[t] = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(t) /
                                      static_cast<long double>(rt.working_conductor()));
    }
    auto modulus = [&](const Coords& c) {
      Complex z{0.0L, 0.0L};
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (!c[t].is_zero()) z += c[t].to_long_double() * basis[t];
      }
      return std::abs(z);
    };
    std::vector<Coords> partial(p + 1, Coords(table.dim));
    // depth = next pole to decide; `any` says whether some pole is included.
    auto recurse = [&](auto& self, unsigned depth, bool any) -> void {
      if (depth == p) {
        if (!any) return;
        const Coords& s = partial[p];
        if (std::all_of(s.begin(), s.end(), [](const Rational& q) { return q.is_zero(); })) return;
        const long double m = modulus(s);
        if (m < report.value) {
          report.value = m;
          report.subset = SubsetMask(chosen);
        }
        return;
      }
      partial[depth + 1] = partial[depth];
      self(self, depth + 1, any);
      const std::size_t options = any ? k : 1;
      chosen |= std::uint64_t{1} << depth;
      for (std::size_t j = 0; j < options; ++j) {
        add_into(partial[depth + 1], partial[depth], table.roots[depth][j]);
        self(self, depth + 1, true);
      }
      chosen &= ~(std::uint64_t{1} << depth);
    };
    recurse(recurse, 0, false);
    return report;
  }

  const auto table = numeric_table(rt, all);
  const long double tol = rt.numeric_data().tol;
  auto recurse = [&](auto& self, unsigned depth, bool any, Complex partial) -> void {
    if (depth == p) {
      if (!any) return;
      const long double m = std::abs(partial);
      if (m < tol) return;
      if (m < 10 * tol) report.ambiguous = true;
      if (m < report.value) {
        report.value = m;
        report.subset = SubsetMask(chosen);
      }
      return;
    }
    self(self, depth + 1, any, partial);
    const std::size_t options = any ? k : 1;
    chosen |= std::uint64_t{1} << depth;
    for (std::size_t j = 0; j < options; ++j) self(self, depth + 1, true, partial + table[depth][j]);
    chosen &= ~(std::uint64_t{1} << depth);
  };
  recurse(recurse, 0, false, Complex{0.0L, 0.0L});
  return report;
}

}  // namespace isores
