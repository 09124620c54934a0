#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <sstream>

#include "isores/cli/json_io.hpp"
#include "isores/cli/run.hpp"
#include "isores/error.hpp"

using namespace isores;
using namespace isores::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_command_line(args, out, err);
  return {status, out.str(), err.str()};
}

Outcome invoke_json(std::vector<std::string> args) {
  args.push_back("--output");
  args.push_back("json");
  return invoke(std::move(args));
}

// "key: value" lines of the human rendering.
std::map<std::string, std::string> human_fields(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos && line[0] != ' ') fields[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return fields;
}

}  // namespace

TEST(Cli, DegreeExample) {
  const auto r = invoke({"degree", "--k", "4", "--a", "13,3", "--b", "4,4,4,4,4,4"});
  EXPECT_EQ(r.status, 0);
  const auto f = human_fields(r.out);
  EXPECT_EQ(f.at("degree"), "8775");
  EXPECT_EQ(f.at("closed form"), "8775");

  const auto j = invoke_json({"degree", "--k", "4", "--a", "13,3", "--b", "4,4,4,4,4,4"});
  EXPECT_EQ(j.status, 0);
  const auto parsed = json::parse(j.out);
  EXPECT_EQ(parsed["degree"], 8775);
  EXPECT_EQ(parsed["closed_form"], 8775);
  EXPECT_NEAR(parsed["gamma_estimate"].get<double>(), 8775.0, 1e-6);
  EXPECT_EQ(std::stod(f.at("gamma estimate")), parsed["gamma_estimate"].get<double>());
}

TEST(Cli, FiberExample) {
  const std::vector<std::string> args = {"fiber", "--k", "4", "--a", "5,-1", "--b", "4,4,4",
                                         "--roots", "1,1,1+z", "--N", "4"};
  const auto r = invoke(args);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(human_fields(r.out).at("count"), "0");
  EXPECT_NE(r.out.find("5/1"), std::string::npos);
  EXPECT_NE(r.out.find("-1/1"), std::string::npos);
  EXPECT_NE(r.out.find("-4/1"), std::string::npos);

  const auto j = invoke_json(args);
  ASSERT_EQ(j.status, 0);
  const auto report = fiber_report_from_json(json::parse(j.out));
  EXPECT_EQ(report.count, 0);
  EXPECT_EQ(report.degree, 5);
  ASSERT_EQ(report.terms.size(), 3U);
  EXPECT_EQ(report.terms[1].contribution, Rational(-1));
  EXPECT_EQ(report.terms[2].partition.blocks.front(), SubsetMask::full(3));
}

TEST(Cli, NumericFiberMatchesExact) {
  const auto j = invoke_json({"fiber", "--k", "4", "--a", "5,-1", "--b", "4,4,4", "--numeric",
                              "1,0,1,0,-4,0", "--tol", "1e-9"});
  ASSERT_EQ(j.status, 0) << j.err;
  EXPECT_EQ(json::parse(j.out)["count"], 0);
}

TEST(Cli, JsonInputs) {
  const auto fiber = invoke_json(
      {"fiber", "--json",
       R"({"signature":{"k":3,"a":[4,-1],"b":[3,3,3]},"residues":{"mode":"roots","k":3,"N":1,"roots":["1","1","1"]}})"});
  ASSERT_EQ(fiber.status, 0) << fiber.err;
  EXPECT_EQ(json::parse(fiber.out)["count"], 0);

  const auto degree = invoke({"degree", "--json", R"({"k": 2, "a": [1, 3], "b": [2, 2, 2, 2]})"});
  EXPECT_EQ(human_fields(degree.out).at("degree"), "9");

  const auto abel = invoke_json(
      {"abelian", "--json", R"({"mode":"roots","k":4,"N":1,"roots":["1","1","1","1","1","1"],"subset":[1,2,3,4,5,6]})"});
  ASSERT_EQ(abel.status, 0) << abel.err;
  EXPECT_EQ(json::parse(abel.out)["abelian_number"], 100);

  // Coefficient-array form of 1 + zeta_4.
  const auto arr = invoke_json(
      {"resonance", "--json", R"({"mode":"roots","k":4,"N":4,"roots":["1","1",[[1,1],[1,1]]]})"});
  ASSERT_EQ(arr.status, 0) << arr.err;
  EXPECT_EQ(profile_from_json(json::parse(arr.out)).resonant.size(), 2U);

  const auto sph = invoke_json({"spherical", "--json", R"({"a": 3, "b": 3, "c": ["1/2", "5/2", "7/3"]})"});
  ASSERT_EQ(sph.status, 0) << sph.err;
  EXPECT_EQ(json::parse(sph.out)["count"], 2);
}

TEST(Cli, HumanAndJsonAgree) {
  const std::vector<std::vector<std::string>> cases = {
      {"abelian", "--k", "3", "--roots", "1,1,1", "--subset", "1,2,3"},
      {"systole", "--k", "2", "--roots", "1,10"},
      {"spherical", "--a", "1", "--b", "5", "--c", "1/2,5/2,7/3"},
      {"degree", "--k", "3", "--a", "4,-1", "--b", "3,3,3"},
  };
  for (const auto& args : cases) {
    const auto human = human_fields(invoke(args).out);
    const auto j = json::parse(invoke_json(args).out);
    if (args[0] == "abelian") EXPECT_EQ(human.at("abelian number"), j["abelian_number"].dump());
    if (args[0] == "systole") EXPECT_EQ(std::stod(human.at("systole")), j["value"].get<double>());
    if (args[0] == "spherical") EXPECT_EQ(human.at("count"), j["count"].dump());
    if (args[0] == "degree") EXPECT_EQ(human.at("degree"), j["degree"].dump());
  }
}

TEST(Cli, ResonanceRoundTrip) {
  const auto j = invoke_json({"resonance", "--k", "4", "--roots", "1,1,1,1,1,1"});
  ASSERT_EQ(j.status, 0);
  const auto parsed = json::parse(j.out);
  const auto profile = profile_from_json(parsed);
  EXPECT_EQ(profile.resonant.size(), 31U);
  EXPECT_EQ(to_json(profile), parsed);
  EXPECT_EQ(human_fields(invoke({"resonance", "--k", "4", "--roots", "1,1,1,1,1,1"}).out).at("resonant subsets"),
            "31");
}

TEST(Cli, InvalidInputExitsOne) {
  const auto sum = invoke({"degree", "--k", "2", "--a", "1,1", "--b", "2,2,2,2"});
  EXPECT_EQ(sum.status, 1);
  EXPECT_NE(sum.err.find("SumMismatch"), std::string::npos);

  const auto j = invoke_json({"degree", "--k", "2", "--a", "1,1", "--b", "2,3,1"});
  EXPECT_EQ(j.status, 1);
  EXPECT_EQ(json::parse(j.err)["error"]["code"], "PoleOrderNotMultipleOfK");

  EXPECT_EQ(invoke({"degree", "--k", "2", "--a", "1", "--b", "2"}).status, 1);
  EXPECT_EQ(invoke({"degree", "--k", "two"}).status, 1);
  EXPECT_EQ(invoke({"fiber", "--k", "4", "--a", "5,-1", "--b", "4,4,4"}).status, 1);
  EXPECT_EQ(invoke({"resonance", "--k", "2", "--numeric", "1,0,1"}).status, 1);
  EXPECT_EQ(invoke({"abelian", "--k", "2", "--roots", "1,1", "--subset", "3"}).status, 1);
  EXPECT_EQ(invoke({"degree", "--json", "{not json"}).status, 1);
  EXPECT_EQ(invoke({"degree", "--json", R"({"k": 2})"}).status, 1);
  EXPECT_EQ(invoke({"frobnicate"}).status, 1);
  EXPECT_EQ(invoke({}).status, 1);
  const auto ng = invoke({"spherical", "--a", "3", "--b", "3", "--c", "1/2,1/2,7/3"});
  EXPECT_EQ(ng.status, 1);
  EXPECT_NE(ng.err.find("NonGenericAngles"), std::string::npos);
}

TEST(Cli, EnvironmentBound) {
  ::setenv("ISORES_MAX_P", "2", 1);
  const auto capped = invoke({"degree", "--k", "4", "--a", "5,-1", "--b", "4,4,4"});
  ::setenv("ISORES_MAX_P", "zero", 1);
  const auto bogus = invoke({"degree", "--k", "4", "--a", "5,-1", "--b", "4,4,4"});
  ::unsetenv("ISORES_MAX_P");
  EXPECT_EQ(capped.status, 1);
  EXPECT_NE(capped.err.find("EnumerationBoundExceeded"), std::string::npos);
  EXPECT_EQ(bogus.status, 1);
  EXPECT_EQ(invoke({"degree", "--k", "4", "--a", "5,-1", "--b", "4,4,4"}).status, 0);
}

TEST(Cli, Selfcheck) {
  const auto r = invoke_json({"selfcheck"});
  EXPECT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_GT(j["total"].get<int>(), 0);
  EXPECT_EQ(j["passed"], j["total"]);
  for (const auto& item : j["items"]) EXPECT_TRUE(item["passed"].get<bool>()) << item["name"];
}

TEST(JsonIo, SchemasRoundTrip) {
  const auto sig = validate_signature(4, 13, 3, {4, 4, 4, 4, 4, 4});
  EXPECT_EQ(signature_from_json(to_json(sig)), sig);

  const auto rt = residues_from_json(json::parse(R"({"mode":"roots","k":4,"N":8,"roots":["1","1","1+z"]})"));
  EXPECT_EQ(rt.working_conductor(), 8U);
  const auto again = residues_from_json(to_json(rt));
  for (unsigned i = 0; i < 3; ++i) EXPECT_EQ(again.exact_data().roots[i], rt.exact_data().roots[i]);

  const auto num = residues_from_json(
      json::parse(R"({"mode":"numeric","k":4,"values":[[1,0],[1,0],[-4,0]],"tol":1e-9})"));
  EXPECT_FALSE(num.is_exact());
  EXPECT_EQ(to_json(residues_from_json(to_json(num))), to_json(num));

  const auto angles = angles_from_json(json::parse(R"({"a": 3, "b": 3, "c": ["1/2", "5/2", "7/3"]})"));
  EXPECT_EQ(to_json(angles_from_json(to_json(angles))), to_json(angles));

  const auto big = integer_from_json(integer_to_json(parse_bigint("123456789012345678901234567890")));
  EXPECT_EQ(big, parse_bigint("123456789012345678901234567890"));

  FiberReport report;
  report.count = 3;
  report.degree = parse_bigint("99999999999999999999");
  report.terms.push_back({{SubsetMask::of({2}), {SubsetMask::of({0, 1})}}, Rational(BigInt(-7), BigInt(2))});
  report.single_resonance_count = BigInt(3);
  report.diagnostics = {"note"};
  EXPECT_EQ(to_json(fiber_report_from_json(to_json(report))), to_json(report));

  SystoleReport systole{0.5L, SubsetMask::of({1}), true, false};
  EXPECT_EQ(to_json(systole_from_json(to_json(systole))), to_json(systole));
}

TEST(JsonIo, SchemaErrorsAreInvalidInput) {
  EXPECT_THROW(signature_from_json(json::parse(R"({"k":4,"a":[13],"b":[4]})")), Error);
  EXPECT_THROW(residues_from_json(json::parse(R"({"mode":"other","k":4})")), Error);
  EXPECT_THROW(residues_from_json(json::parse(R"({"mode":"roots","k":4,"N":2,"roots":[[[1,1],[1,1],[1,1]]]})")), Error);
  EXPECT_THROW(subset_from_json(json::parse("[0]")), Error);
}
