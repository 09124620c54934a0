#include "isores/cli/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "isores/error.hpp"

namespace isores::cli {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "JSON: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema_error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

long as_long(const json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<long> as_long_list(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  std::vector<long> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_long(e, what));
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  schema_error("expected a rational as an integer or \"num/den\" string");
}

}  // namespace

json integer_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return json(value.get_si());
  return json(to_string(value));
}

BigInt integer_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  schema_error("expected an integer");
}

json to_json(const Signature& sig) {
  return json{{"k", sig.k()}, {"a", {sig.a1(), sig.a2()}}, {"b", sig.b()}};
}

Signature signature_from_json(const json& j) {
  const long k = as_long(field(j, "k"), "k");
  const auto a = as_long_list(field(j, "a"), "a");
  if (a.size() != 2) schema_error("\"a\" must hold exactly two integers");
  return validate_signature(k, a[0], a[1], as_long_list(field(j, "b"), "b"));
}

Cyclotomic cyclotomic_from_json(const json& j, std::uint64_t conductor) {
  if (j.is_string()) return cyc_from_string(j.get<std::string>(), conductor);
  if (!j.is_array()) schema_error("a root must be a string or an array of [num, den] pairs");
  if (j.size() > conductor) schema_error("coefficient array longer than the conductor");
  std::vector<Rational> terms;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) schema_error("coefficients are [num, den] pairs");
    terms.emplace_back(integer_from_json(pair[0]), integer_from_json(pair[1]));
  }
  return Cyclotomic::from_powers(make_field(conductor), terms);
}

json to_json(const ResidueTuple& rt) {
  if (rt.is_exact()) {
    json roots = json::array();
    for (const auto& r : rt.exact_data().roots) roots.push_back(r.to_string());
    return json{{"mode", "roots"}, {"k", rt.k()}, {"N", rt.working_conductor()}, {"roots", roots}};
  }
  const auto& data = rt.numeric_data();
  json values = json::array();
  for (const auto& v : data.values) {
    values.push_back({static_cast<double>(v.real()), static_cast<double>(v.imag())});
  }
  return json{{"mode", "numeric"},
              {"k", rt.k()},
              {"values", values},
              {"tol", static_cast<double>(data.tol)}};
}

ResidueTuple residues_from_json(const json& j) {
  const std::string mode = field(j, "mode").is_string() ? field(j, "mode").get<std::string>() : "";
  const long k = as_long(field(j, "k"), "k");
  if (mode == "roots") {
    const long n = as_long(field(j, "N"), "N");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "conductor N must be positive");
    const auto conductor = static_cast<std::uint64_t>(n);
    const json& list = field(j, "roots");
    if (!list.is_array()) schema_error("\"roots\" must be an array");
    std::vector<Cyclotomic> roots;
    for (const auto& r : list) roots.push_back(cyclotomic_from_json(r, conductor));
    return ResidueTuple::exact(k, conductor, std::move(roots));
  }
  if (mode == "numeric") {
    const json& list = field(j, "values");
    if (!list.is_array()) schema_error("\"values\" must be an array");
    std::vector<Complex> values;
    for (const auto& v : list) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        schema_error("numeric residues are [re, im] pairs");
      }
      values.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    long double tol = 1e-9L;
    if (j.contains("tol")) {
      if (!j["tol"].is_number()) schema_error("\"tol\" must be a number");
      tol = j["tol"].get<double>();
    }
    return ResidueTuple::numeric(k, std::move(values), tol);
  }
  schema_error("\"mode\" must be \"roots\" or \"numeric\"");
}

json to_json(const SphericalAngles& angles) {
  json c = json::array();
  for (const auto& ci : angles.c()) c.push_back(ci.to_string());
  return json{{"a", angles.a()}, {"b", angles.b()}, {"c", c}};
}

SphericalAngles angles_from_json(const json& j) {
  const json& list = field(j, "c");
  if (!list.is_array()) schema_error("\"c\" must be an array");
  std::vector<Rational> c;
  for (const auto& e : list) c.push_back(rational_from_json(e));
  return make_angles(as_long(field(j, "a"), "a"), as_long(field(j, "b"), "b"), std::move(c));
}

json subset_to_json(SubsetMask mask) {
  json out = json::array();
  for (unsigned i : mask.indices()) out.push_back(i + 1);
  return out;
}

SubsetMask subset_from_json(const json& j) {
  if (!j.is_array()) schema_error("a subset is an array of one-based indices");
  std::vector<unsigned> indices;
  for (const auto& e : j) {
    const long i = as_long(e, "subset index");
    if (i < 1 || i > static_cast<long>(SubsetMask::kMaxSize)) {
      throw Error(ErrorCode::SubsetOutOfRange, "subset index " + std::to_string(i) + " out of range");
    }
    indices.push_back(static_cast<unsigned>(i - 1));
  }
  return SubsetMask::of(indices);
}

json to_json(const ResonanceProfile& profile) {
  json resonant = json::array();
  for (const auto& r : profile.resonant) {
    resonant.push_back({{"subset", subset_to_json(r.mask)}, {"abelian_number", r.abelian_number}});
  }
  json out{{"numeric", profile.numeric}, {"ambiguous", profile.ambiguous}, {"resonant", resonant}};
  if (profile.numeric) out["tol"] = static_cast<double>(profile.tolerance);
  return out;
}

ResonanceProfile profile_from_json(const json& j) {
  ResonanceProfile profile;
  profile.numeric = field(j, "numeric").get<bool>();
  profile.ambiguous = field(j, "ambiguous").get<bool>();
  if (j.contains("tol")) profile.tolerance = j["tol"].get<double>();
  for (const auto& r : field(j, "resonant")) {
    profile.resonant.push_back(
        {subset_from_json(field(r, "subset")), field(r, "abelian_number").get<std::uint64_t>()});
  }
  return profile;
}

json to_json(const FiberReport& report) {
  json terms = json::array();
  for (const auto& t : report.terms) {
    json blocks = json::array();
    for (auto b : t.partition.blocks) blocks.push_back(subset_to_json(b));
    terms.push_back({{"J0", subset_to_json(t.partition.j0)},
                     {"blocks", blocks},
                     {"contribution", t.contribution.to_string()}});
  }
  json out{{"count", integer_to_json(report.count)},
           {"degree", integer_to_json(report.degree)},
           {"terms", terms},
           {"unverified_regime", report.unverified_regime},
           {"diagnostics", report.diagnostics}};
  if (report.single_resonance_count) {
    out["single_resonance_count"] = integer_to_json(*report.single_resonance_count);
  }
  return out;
}

FiberReport fiber_report_from_json(const json& j) {
  FiberReport report;
  report.count = integer_from_json(field(j, "count"));
  report.degree = integer_from_json(field(j, "degree"));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) schema_error("\"terms\" must be an array");
  for (const auto& t : terms) {
    FiberTerm term;
    term.partition.j0 = subset_from_json(field(t, "J0"));
    for (const auto& b : field(t, "blocks")) term.partition.blocks.push_back(subset_from_json(b));
    const json& c = field(t, "contribution");
    if (!c.is_string()) schema_error("\"contribution\" must be a \"num/den\" string");
    term.contribution = Rational::parse(c.get<std::string>());
    report.terms.push_back(std::move(term));
  }
  if (j.contains("unverified_regime")) report.unverified_regime = j["unverified_regime"].get<bool>();
  if (j.contains("diagnostics")) {
    report.diagnostics = j["diagnostics"].get<std::vector<std::string>>();
  }
  if (j.contains("single_resonance_count")) {
    report.single_resonance_count = integer_from_json(j["single_resonance_count"]);
  }
  return report;
}

json to_json(const SystoleReport& report) {
  return json{{"value", static_cast<double>(report.value)},
              {"subset", subset_to_json(report.subset)},
              {"numeric", report.numeric},
              {"ambiguous", report.ambiguous}};
}

SystoleReport systole_from_json(const json& j) {
  SystoleReport report;
  report.value = field(j, "value").get<double>();
  report.subset = subset_from_json(field(j, "subset"));
  report.numeric = field(j, "numeric").get<bool>();
  report.ambiguous = field(j, "ambiguous").get<bool>();
  return report;
}

}  // namespace isores::cli
