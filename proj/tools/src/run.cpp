#include "isores/cli/run.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "isores/cli/json_io.hpp"
#include "isores/cli/selfcheck.hpp"
#include "isores/error.hpp"

namespace isores::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    out.push_back(trim(std::string_view(text).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& token, const std::string& flag) {
  long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::SyntaxError, flag + ": \"" + token + "\" is not an integer");
  }
  return value;
}

std::vector<long> parse_long_list(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  for (const auto& token : split_commas(text)) out.push_back(parse_long(token, flag));
  return out;
}

double parse_double(const std::string& token, const std::string& flag) {
  std::istringstream in(token);
  double value = 0;
  in >> value;
  if (token.empty() || in.fail() || !in.eof()) {
    throw Error(ErrorCode::SyntaxError, flag + ": \"" + token + "\" is not a number");
  }
  return value;
}

[[noreturn]] void missing(const std::string& flag, const std::string& sub) {
  throw Error(ErrorCode::InvalidArgument, sub + " needs " + flag + " (or --json)");
}

Signature signature_from_flags(const CommandRequest& r) {
  if (!r.k) missing("--k", r.subcommand);
  if (r.a.empty()) missing("--a", r.subcommand);
  if (r.b.empty()) missing("--b", r.subcommand);
  const auto a = parse_long_list(r.a, "--a");
  if (a.size() != 2) throw Error(ErrorCode::SyntaxError, "--a takes exactly two integers a1,a2");
  return validate_signature(*r.k, a[0], a[1], parse_long_list(r.b, "--b"));
}

ResidueTuple residues_from_flags(const CommandRequest& r) {
  if (!r.k) missing("--k", r.subcommand);
  if (!r.numeric.empty()) {
    if (!r.roots.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--roots and --numeric are mutually exclusive");
    }
    const auto tokens = split_commas(r.numeric);
    if (tokens.size() % 2 != 0) {
      throw Error(ErrorCode::SyntaxError, "--numeric takes re,im pairs: an even count of numbers");
    }
    std::vector<Complex> values;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
      values.emplace_back(parse_double(tokens[i], "--numeric"),
                          parse_double(tokens[i + 1], "--numeric"));
    }
    return ResidueTuple::numeric(*r.k, std::move(values), r.tol.value_or(1e-9));
  }
  if (r.roots.empty()) missing("--roots or --numeric", r.subcommand);
  const long n = r.conductor.value_or(1);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "--N must be positive");
  std::vector<Cyclotomic> roots;
  for (const auto& token : split_commas(r.roots)) {
    roots.push_back(cyc_from_string(token, static_cast<std::uint64_t>(n)));
  }
  return ResidueTuple::exact(*r.k, static_cast<std::uint64_t>(n), std::move(roots));
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::SyntaxError, std::string("JSON: missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

std::string fmt_integer(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string fmt_subset(const json& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ",";
    s += j[i].dump();
  }
  return s + "}";
}

// Each subcommand builds a JSON result; human output is rendered from it so
// both formats carry the same numbers.

json do_degree(const CommandRequest& r, const Limits& limits) {
  const Signature sig = r.input ? signature_from_json(*r.input) : signature_from_flags(r);
  const BigInt degree = degree_generic(sig, limits);
  json out{{"signature", to_json(sig)}, {"degree", integer_to_json(degree)}};
  if (sig.all_poles_order_k() && sig.a2() > -sig.k()) {
    out["closed_form"] = integer_to_json(degree_order_k_poles(sig));
    out["gamma_estimate"] = static_cast<double>(gamma_degree_estimate(sig));
  }
  return out;
}

void render_degree(const json& j, std::ostream& out) {
  const auto& s = j["signature"];
  out << "signature: " << validate_signature(s["k"], s["a"][0], s["a"][1],
                                             s["b"].get<std::vector<long>>()).to_string()
      << "\n";
  out << "degree: " << fmt_integer(j["degree"]) << "\n";
  if (j.contains("closed_form")) {
    out << "closed form: " << fmt_integer(j["closed_form"]) << "\n";
    out << "gamma estimate: " << fmt_double(j["gamma_estimate"]) << "\n";
  }
}

json do_fiber(const CommandRequest& r, const Limits& limits) {
  const Signature sig = r.input ? signature_from_json(member(*r.input, "signature"))
                                : signature_from_flags(r);
  const ResidueTuple rt = r.input ? residues_from_json(member(*r.input, "residues"))
                                  : residues_from_flags(r);
  json out = to_json(fiber_count(sig, rt, limits));
  out["signature"] = to_json(sig);
  out["residues"] = to_json(rt);
  return out;
}

void render_fiber(const json& j, std::ostream& out) {
  out << "degree: " << fmt_integer(j["degree"]) << "\n";
  out << "terms:\n";
  for (const auto& t : j["terms"]) {
    std::string label = "J0=" + fmt_subset(t["J0"]);
    for (const auto& b : t["blocks"]) label += " | " + fmt_subset(b);
    out << "  " << std::left << std::setw(40) << label << " " << t["contribution"].get<std::string>()
        << "\n";
  }
  if (j.contains("single_resonance_count")) {
    out << "single resonance formula: " << fmt_integer(j["single_resonance_count"]) << "\n";
  }
  if (j["unverified_regime"].get<bool>()) out << "regime: unverified\n";
  for (const auto& d : j["diagnostics"]) out << "note: " << d.get<std::string>() << "\n";
  out << "count: " << fmt_integer(j["count"]) << "\n";
}

json do_resonance(const CommandRequest& r, const Limits& limits) {
  const ResidueTuple rt = r.input ? residues_from_json(*r.input) : residues_from_flags(r);
  return to_json(resonant_subsets(rt, limits));
}

void render_resonance(const json& j, std::ostream& out) {
  out << "resonant subsets: " << j["resonant"].size() << "\n";
  for (const auto& e : j["resonant"]) {
    out << "  " << std::left << std::setw(24) << fmt_subset(e["subset"])
        << " abelian number: " << e["abelian_number"].dump() << "\n";
  }
  if (j["ambiguous"].get<bool>()) out << "note: some sums lie within 10x the tolerance\n";
}

json do_abelian(const CommandRequest& r, const Limits& limits) {
  const ResidueTuple rt = r.input ? residues_from_json(*r.input) : residues_from_flags(r);
  SubsetMask subset;
  if (r.input) {
    subset = subset_from_json(member(*r.input, "subset"));
  } else {
    if (r.subset.empty()) missing("--subset", r.subcommand);
    std::vector<unsigned> indices;
    for (long i : parse_long_list(r.subset, "--subset")) {
      if (i < 1 || i > static_cast<long>(rt.p())) {
        throw Error(ErrorCode::SubsetOutOfRange,
                    "--subset index " + std::to_string(i) + " outside 1.." + std::to_string(rt.p()));
      }
      indices.push_back(static_cast<unsigned>(i - 1));
    }
    subset = SubsetMask::of(indices);
  }
  const auto test = test_resonance(rt, subset, limits);
  const auto ab = abelian_number(rt, subset, limits);
  return json{{"subset", subset_to_json(subset)},
              {"resonant", test.resonant},
              {"ambiguous", test.ambiguous},
              {"abelian_number", ab}};
}

void render_abelian(const json& j, std::ostream& out) {
  out << "subset: " << fmt_subset(j["subset"]) << "\n";
  out << "resonant: " << (j["resonant"].get<bool>() ? "yes" : "no") << "\n";
  out << "abelian number: " << j["abelian_number"].dump() << "\n";
  if (j["ambiguous"].get<bool>()) out << "note: some sums lie within 10x the tolerance\n";
}

json do_systole(const CommandRequest& r, const Limits& limits) {
  const ResidueTuple rt = r.input ? residues_from_json(*r.input) : residues_from_flags(r);
  return to_json(residual_systole(rt, limits));
}

void render_systole(const json& j, std::ostream& out) {
  out << "systole: " << fmt_double(j["value"]) << "\n";
  out << "attained on: " << fmt_subset(j["subset"]) << "\n";
  if (j["ambiguous"].get<bool>()) out << "note: some sums lie within 10x the tolerance\n";
}

json do_spherical(const CommandRequest& r, const Limits&) {
  SphericalAngles angles = [&] {
    if (r.input) return angles_from_json(*r.input);
    if (r.a.empty()) missing("--a", r.subcommand);
    if (r.b.empty()) missing("--b", r.subcommand);
    if (r.c.empty()) missing("--c", r.subcommand);
    std::vector<Rational> c;
    for (const auto& token : split_commas(r.c)) c.push_back(Rational::parse(token));
    return make_angles(parse_long(trim(r.a), "--a"), parse_long(trim(r.b), "--b"), std::move(c));
  }();
  const BigInt count = spherical_count(angles);
  return json{{"angles", to_json(angles)}, {"count", integer_to_json(count)}};
}

void render_spherical(const json& j, std::ostream& out) {
  const auto& a = j["angles"];
  out << "angles: a=" << a["a"].dump() << " b=" << a["b"].dump() << " c=";
  for (std::size_t i = 0; i < a["c"].size(); ++i) {
    out << (i ? "," : "") << a["c"][i].get<std::string>();
  }
  out << "\ncount: " << fmt_integer(j["count"]) << "\n";
}

json do_selfcheck(const CommandRequest&, const Limits& limits) {
  json items = json::array();
  std::size_t passed = 0;
  for (const auto& c : run_selfcheck(limits)) {
    items.push_back({{"name", c.name},
                     {"passed", c.passed},
                     {"instances", c.instances},
                     {"detail", c.detail}});
    passed += c.passed ? 1 : 0;
  }
  return json{{"items", items}, {"passed", passed}, {"total", items.size()}};
}

void render_selfcheck(const json& j, std::ostream& out) {
  for (const auto& item : j["items"]) {
    out << (item["passed"].get<bool>() ? "PASS  " : "FAIL  ") << std::left << std::setw(34)
        << item["name"].get<std::string>() << " " << item["instances"].dump() << " instances";
    if (!item["detail"].get<std::string>().empty()) out << "  (" << item["detail"].get<std::string>() << ")";
    out << "\n";
  }
  out << j["passed"].dump() << "/" << j["total"].dump() << " checks passed\n";
}

void report_error(const CommandRequest& r, std::ostream& err, int status, std::string_view code,
                  const std::string& message) {
  if (r.output == OutputFormat::Json) {
    err << json{{"error", {{"status", status}, {"code", code}, {"message", message}}}}.dump() << "\n";
  } else {
    err << "error: " << code << ": " << message << "\n";
  }
}

json load_json_argument(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + text.substr(1));
    return json::parse(in);
  }
  return json::parse(text);
}

}  // namespace

ParseOutcome parse_request(const std::vector<std::string>& args, std::ostream& out,
                           std::ostream& err) {
  CLI::App app{"Exact counts for isoresidual fibers of k-differentials on the sphere", "isores"};
  app.require_subcommand(1);
  CommandRequest request;
  std::string json_text;
  std::string output = "human";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--json", json_text, "JSON input (or @file) replacing the flags");
  };
  auto signature_flags = [&](CLI::App* sub) {
    sub->add_option("--k", request.k, "order k of the differentials");
    sub->add_option("--a", request.a, "zero orders a1,a2");
    sub->add_option("--b", request.b, "pole orders b1,...,bp (positive, divisible by k)");
  };
  auto residue_flags = [&](CLI::App* sub) {
    sub->add_option("--roots", request.roots, "k-th roots of the residues, e.g. \"1,1,1+z\"");
    sub->add_option("--N", request.conductor, "conductor of the roots (z = exp(2 pi i/N))");
    sub->add_option("--numeric", request.numeric, "residues as a flat re,im list");
    sub->add_option("--tol", request.tol, "numeric zero tolerance");
  };

  auto* degree = app.add_subcommand("degree", "degree of the generic isoresidual fiber");
  signature_flags(degree);
  common(degree);
  auto* fiber = app.add_subcommand("fiber", "cardinality of the fiber over a residue tuple");
  signature_flags(fiber);
  residue_flags(fiber);
  common(fiber);
  auto* resonance = app.add_subcommand("resonance", "resonant subsets and abelian numbers");
  resonance->add_option("--k", request.k, "order k");
  residue_flags(resonance);
  common(resonance);
  auto* abelian = app.add_subcommand("abelian", "abelian number of one subset");
  abelian->add_option("--k", request.k, "order k");
  abelian->add_option("--subset", request.subset, "one-based pole indices, e.g. 1,2");
  residue_flags(abelian);
  common(abelian);
  auto* systole = app.add_subcommand("systole", "residual systole");
  systole->add_option("--k", request.k, "order k");
  residue_flags(systole);
  common(systole);
  auto* spherical = app.add_subcommand("spherical", "dihedral cone spherical metrics");
  spherical->add_option("--a", request.a, "odd integer a (angle a pi)");
  spherical->add_option("--b", request.b, "odd integer b (angle b pi)");
  spherical->add_option("--c", request.c, "non-integer angles c_i, e.g. 1/2,5/2,7/3");
  common(spherical);
  auto* selfcheck = app.add_subcommand("selfcheck", "run identity grids and regressions");
  common(selfcheck);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, kOk};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, kOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << to_string(ErrorCode::InvalidArgument) << ": " << e.what() << "\n";
    return {std::nullopt, kInvalidInput};
  }

  request.subcommand = app.get_subcommands().front()->get_name();
  request.output = output == "json" ? OutputFormat::Json : OutputFormat::Human;
  if (!json_text.empty()) {
    try {
      request.input = load_json_argument(json_text);
    } catch (const std::exception& e) {
      report_error(request, err, kInvalidInput, to_string(ErrorCode::SyntaxError), e.what());
      return {std::nullopt, kInvalidInput};
    }
  }
  return {std::move(request), kOk};
}

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  using Handler = json (*)(const CommandRequest&, const Limits&);
  using Renderer = void (*)(const json&, std::ostream&);
  struct Entry {
    const char* name;
    Handler handler;
    Renderer renderer;
  };
  static const Entry table[] = {
      {"degree", do_degree, render_degree},          {"fiber", do_fiber, render_fiber},
      {"resonance", do_resonance, render_resonance}, {"abelian", do_abelian, render_abelian},
      {"systole", do_systole, render_systole},       {"spherical", do_spherical, render_spherical},
      {"selfcheck", do_selfcheck, render_selfcheck},
  };
  const Entry* entry = nullptr;
  for (const auto& e : table) {
    if (request.subcommand == e.name) entry = &e;
  }
  if (entry == nullptr) {
    report_error(request, err, kInvalidInput, to_string(ErrorCode::InvalidArgument),
                 "unknown subcommand \"" + request.subcommand + "\"");
    return kInvalidInput;
  }

  try {
    const json result = entry->handler(request, Limits::from_environment());
    if (request.output == OutputFormat::Json) {
      out << result.dump(2) << "\n";
    } else {
      entry->renderer(result, out);
    }
    if (request.subcommand == "selfcheck" && result["passed"] != result["total"]) {
      return kInternalFailure;
    }
    return kOk;
  } catch (const Error& e) {
    report_error(request, err, kInvalidInput, e.name(), e.what());
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    report_error(request, err, kInvalidInput, to_string(ErrorCode::SyntaxError), e.what());
    return kInvalidInput;
  } catch (const InternalError& e) {
    report_error(request, err, kInternalFailure, e.name(), e.what());
    return kInternalFailure;
  } catch (const std::exception& e) {
    report_error(request, err, kInternalFailure, "InternalError", e.what());
    return kInternalFailure;
  }
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_request(args, out, err);
  if (!parsed.request) return parsed.status;
  return run(*parsed.request, out, err);
}

}  // namespace isores::cli
