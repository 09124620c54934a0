#include "isores/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "isores/error.hpp"

namespace isores {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

namespace {

const UniPoly& cyclotomic_memo(std::uint64_t n, std::map<std::uint64_t, UniPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  UniPoly acc = UniPoly::monomial(Rational(1), n) - UniPoly::constant(Rational(1));
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [quot, rem] = acc.divmod(cyclotomic_memo(d, memo));
    if (!rem.is_zero()) {
      throw InternalError(InternalCode::ConsistencyFailure,
                          "inexact division while building Phi_" + std::to_string(n));
    }
    acc = std::move(quot);
  }
  return memo.emplace(n, std::move(acc)).first->second;
}

void require_conductor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
}

}  // namespace

UniPoly cyclotomic_polynomial(std::uint64_t n) {
  require_conductor(n);
  std::map<std::uint64_t, UniPoly> memo;
  return cyclotomic_memo(n, memo);
}

CyclotomicField::CyclotomicField(std::uint64_t conductor)
    : conductor_(conductor), degree_(0), modulus_() {
  require_conductor(conductor);
  modulus_ = cyclotomic_polynomial(conductor);
  degree_ = static_cast<std::size_t>(modulus_.degree());

  // x^(j+1) = x * x^j, folding the x^phi overflow back with Phi_N (monic).
  powers_.reserve(conductor);
  std::vector<Rational> current(degree_);
  current[0] = Rational(1);
  const auto& phi = modulus_.coefficients();
  for (std::uint64_t j = 0; j < conductor; ++j) {
    powers_.push_back(current);
    const Rational overflow = current[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = Rational();
    if (!overflow.is_zero()) {
      for (std::size_t i = 0; i < degree_; ++i) current[i] -= overflow * phi[i];
    }
  }
}

const std::vector<Rational>& CyclotomicField::power(std::uint64_t exponent) const {
  return powers_[exponent % conductor_];
}

FieldHandle make_field(std::uint64_t conductor) {
  return std::make_shared<const CyclotomicField>(conductor);
}

namespace {

// Field of the larger conductor when one divides the other; fresh otherwise.
FieldHandle common_field(const FieldHandle& a, const FieldHandle& b) {
  if (a == b) return a;
  const std::uint64_t m = a->conductor();
  const std::uint64_t n = b->conductor();
  if (n % m == 0) return b;
  if (m % n == 0) return a;
  return make_field(std::lcm(m, n));
}

}  // namespace

Cyclotomic::Cyclotomic() : field_(make_field(1)), coords_(1) {}

Cyclotomic::Cyclotomic(FieldHandle field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null cyclotomic field");
  if (coords_.size() != field_->degree()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate vector of length " +
                                                std::to_string(coords_.size()) + ", expected " +
                                                std::to_string(field_->degree()));
  }
}

Cyclotomic Cyclotomic::rational(const Rational& q, std::uint64_t conductor) {
  return rational(q, make_field(conductor));
}

Cyclotomic Cyclotomic::rational(const Rational& q, FieldHandle field) {
  std::vector<Rational> coords(field->degree());
  coords[0] = q;
  return Cyclotomic(std::move(field), std::move(coords));
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t conductor, std::uint64_t exponent) {
  return root_of_unity(make_field(conductor), exponent);
}

Cyclotomic Cyclotomic::root_of_unity(const FieldHandle& field, std::uint64_t exponent) {
  return Cyclotomic(field, field->power(exponent));
}

Cyclotomic Cyclotomic::from_powers(const FieldHandle& field, const std::vector<Rational>& terms) {
  std::vector<Rational> coords(field->degree());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (terms[j].is_zero()) continue;
    const auto& row = field->power(j);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!row[i].is_zero()) coords[i] += terms[j] * row[i];
    }
  }
  return Cyclotomic(field, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorCode::PreconditionViolation, "element " + to_string() + " is not rational");
  }
  return coords_[0];
}

Cyclotomic Cyclotomic::embed(std::uint64_t conductor) const {
  if (conductor == this->conductor()) return *this;
  return embed(make_field(conductor));
}

Cyclotomic Cyclotomic::embed(const FieldHandle& field) const {
  const std::uint64_t n = field->conductor();
  const std::uint64_t m = conductor();
  if (n % m != 0) {
    throw Error(ErrorCode::InvalidArgument, "cannot embed Q(zeta_" + std::to_string(m) +
                                                ") into Q(zeta_" + std::to_string(n) + ")");
  }
  if (field == field_) return *this;
  // zeta_M = zeta_N^(N/M)
  const std::uint64_t step = n / m;
  std::vector<Rational> coords(field->degree());
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j].is_zero()) continue;
    const auto& row = field->power(j * step);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!row[i].is_zero()) coords[i] += coords_[j] * row[i];
    }
  }
  return Cyclotomic(field, std::move(coords));
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(std::uint64_t conductor) const {
  const std::uint64_t n = this->conductor();
  require_conductor(conductor);
  if (n % conductor != 0) return std::nullopt;
  auto small = make_field(conductor);
  const std::size_t rows = field_->degree();
  const std::size_t cols = small->degree();

  // Columns are the images of zeta_M^j; solve A y = coords exactly.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  const std::uint64_t step = n / conductor;
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& image = field_->power(j * step);
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = image[i];
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][cols] = coords_[i];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j <= cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!a[i][cols].is_zero()) return std::nullopt;
  }
  std::vector<Rational> y(cols);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = a[i][cols];
  return Cyclotomic(small, std::move(y));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (field_ != rhs.field_ && field_->conductor() != rhs.conductor()) {
    auto f = common_field(field_, rhs.field_);
    *this = embed(f);
    return *this += rhs.embed(f);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (field_ != rhs.field_ && field_->conductor() != rhs.conductor()) {
    auto f = common_field(field_, rhs.field_);
    *this = embed(f);
    return *this -= rhs.embed(f);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (field_ != rhs.field_ && field_->conductor() != rhs.conductor()) {
    auto f = common_field(field_, rhs.field_);
    *this = embed(f);
    return *this *= rhs.embed(f);
  }
  const std::size_t d = coords_.size();
  std::vector<Rational> wide(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!rhs.coords_[j].is_zero()) wide[i + j] += coords_[i] * rhs.coords_[j];
    }
  }
  std::vector<Rational> out(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t e = d; e < wide.size(); ++e) {
    if (wide[e].is_zero()) continue;
    const auto& row = field_->power(e);
    for (std::size_t i = 0; i < d; ++i) {
      if (!row[i].is_zero()) out[i] += wide[e] * row[i];
    }
  }
  coords_ = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic element");
  // Extended Euclid: s * a + t * Phi = gcd, a nonzero constant since Phi_N is irreducible.
  UniPoly r0 = field_->modulus();
  UniPoly r1(coords_);
  UniPoly s0;
  UniPoly s1 = UniPoly::constant(Rational(1));
  while (r1.degree() > 0) {
    auto [q, rem] = r0.divmod(r1);
    UniPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) {
    throw InternalError(InternalCode::ConsistencyFailure, "non-invertible nonzero element");
  }
  UniPoly inv = s1 * (Rational(1) / r1.leading());
  auto [unused, reduced] = inv.divmod(field_->modulus());
  std::vector<Rational> coords(field_->degree());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = reduced.coefficient(i);
  return Cyclotomic(field_, std::move(coords));
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.conductor() == rhs.conductor()) return lhs.coords_ == rhs.coords_;
  auto f = common_field(lhs.field_, rhs.field_);
  return lhs.embed(f).coords_ == rhs.embed(f).coords_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const Rational& c = coords_[j];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (j == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "z";
    if (j > 1) os << "^" << j;
  }
  return first ? "0" : os.str();
}

Cyclotomic cyc_pow(const Cyclotomic& x, std::uint64_t exponent) {
  Cyclotomic result = Cyclotomic::rational(Rational(1), x.field());
  Cyclotomic base = x;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::uint64_t conductor) : conductor_(conductor) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }
  }

  std::vector<Rational> parse() {
    std::vector<Rational> terms(conductor_);
    if (text_.empty()) fail("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, exponent] = term();
      terms[exponent % conductor_] += sign < 0 ? -coeff : coeff;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::pair<Rational, std::uint64_t> term() {
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit = digits();
      if (peek() == '/') {
        ++pos_;
        lit += "/" + digits();
      }
      coeff = Rational::parse(lit);
      if (peek() != '*') return {coeff, 0};
      ++pos_;
      if (peek() != 'z') fail("expected 'z' after '*'");
    }
    if (peek() != 'z') fail("expected a rational or 'z'");
    ++pos_;
    std::uint64_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      const std::string e = digits();
      // Reduce digit by digit so long exponents stay exact modulo N.
      exponent = 0;
      for (char ch : e) exponent = (exponent * 10 + static_cast<std::uint64_t>(ch - '0')) % conductor_;
    }
    return {coeff, exponent};
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::uint64_t conductor_;
};

}  // namespace

Cyclotomic cyc_from_string(std::string_view expr, std::uint64_t conductor) {
  require_conductor(conductor);
  auto terms = TermParser(expr, conductor).parse();
  return Cyclotomic::from_powers(make_field(conductor), terms);
}

std::complex<long double> cyc_to_complex(const Cyclotomic& x, unsigned digits) {
  if (digits == 0 || digits > 18) {
    throw Error(ErrorCode::InvalidArgument,
                "precision of " + std::to_string(digits) + " digits not supported (1..18)");
  }
  const long double n = static_cast<long double>(x.conductor());
  const auto& coords = x.coordinates();
  std::complex<long double> acc{0.0L, 0.0L};
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j].is_zero()) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / n;
    acc += coords[j].to_long_double() * std::polar(1.0L, angle);
  }
  return acc;
}

}  // namespace isores
