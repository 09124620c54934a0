#include "isores/residue_tuple.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isores/error.hpp"

namespace isores {

namespace {

void require_level(long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1, got " + std::to_string(k));
}

void require_poles(std::size_t p) {
  if (p == 0) throw Error(ErrorCode::EmptyPoleList, "a residue tuple needs at least one entry");
  if (p > 63) throw Error(ErrorCode::EnumerationBoundExceeded, "at most 63 residues are supported");
}

Complex unit_root(long k, long j) {
  const long double angle =
      2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / static_cast<long double>(k);
  return std::polar(1.0L, angle);
}

}  // namespace

ResidueTuple ResidueTuple::exact(long k, std::uint64_t conductor, std::vector<Cyclotomic> roots) {
  require_level(k);
  if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  require_poles(roots.size());
  ResidueTuple rt;
  rt.k_ = k;
  rt.p_ = static_cast<unsigned>(roots.size());
  rt.working_conductor_ = lcm_u64(conductor, static_cast<std::uint64_t>(k));
  auto field = make_field(rt.working_conductor_);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (rt.working_conductor_ % roots[i].conductor() != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "root " + std::to_string(i + 1) + " lives in Q(zeta_" +
                      std::to_string(roots[i].conductor()) + "), outside Q(zeta_" +
                      std::to_string(rt.working_conductor_) + ")");
    }
    if (roots[i].is_zero()) {
      throw Error(ErrorCode::ZeroResidue, "residue " + std::to_string(i + 1) + " is zero");
    }
    roots[i] = roots[i].embed(field);
  }
  rt.data_ = ExactRoots{k, conductor, std::move(roots)};
  return rt;
}

ResidueTuple ResidueTuple::numeric(long k, std::vector<Complex> values, long double tol) {
  require_level(k);
  require_poles(values.size());
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(std::abs(values[i]) > tol)) {
      throw Error(ErrorCode::ZeroResidue,
                  "residue " + std::to_string(i + 1) + " has modulus within the tolerance of zero");
    }
  }
  ResidueTuple rt;
  rt.k_ = k;
  rt.p_ = static_cast<unsigned>(values.size());
  rt.data_ = NumericResidues{k, std::move(values), tol};
  return rt;
}

const ExactRoots& ResidueTuple::exact_data() const {
  if (!is_exact()) throw Error(ErrorCode::PreconditionViolation, "residue tuple is numeric");
  return std::get<ExactRoots>(data_);
}

const NumericResidues& ResidueTuple::numeric_data() const {
  if (is_exact()) throw Error(ErrorCode::PreconditionViolation, "residue tuple is exact");
  return std::get<NumericResidues>(data_);
}

std::vector<Cyclotomic> ResidueTuple::exact_root_choices(unsigned i) const {
  const auto& data = exact_data();
  const Cyclotomic& root = data.roots.at(i);
  const std::uint64_t step = working_conductor_ / static_cast<std::uint64_t>(k_);
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(k_));
  for (long j = 0; j < k_; ++j) {
    out.push_back(root * Cyclotomic::root_of_unity(root.field(), step * static_cast<std::uint64_t>(j)));
  }
  return out;
}

std::vector<Complex> ResidueTuple::numeric_root_choices(unsigned i) const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(k_));
  Complex base;
  if (is_exact()) {
    base = cyc_to_complex(exact_data().roots.at(i));
  } else {
    base = std::pow(numeric_data().values.at(i), 1.0L / static_cast<long double>(k_));
  }
  for (long j = 0; j < k_; ++j) out.push_back(base * unit_root(k_, j));
  return out;
}

Cyclotomic ResidueTuple::exact_residue(unsigned i) const {
  return cyc_pow(exact_data().roots.at(i), static_cast<std::uint64_t>(k_));
}

Complex ResidueTuple::residue_value(unsigned i) const {
  if (is_exact()) return cyc_to_complex(exact_residue(i));
  return numeric_data().values.at(i);
}

}  // namespace isores
