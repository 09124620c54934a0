#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace isores::cli {

enum class OutputFormat { Human, Json };

enum ExitStatus : int { kOk = 0, kInvalidInput = 1, kInternalFailure = 2 };

/// A parsed command line. Flags mirror the JSON schemas; when `input` is set
/// it replaces the corresponding flags.
struct CommandRequest {
  std::string subcommand;
  std::optional<nlohmann::json> input;
  OutputFormat output = OutputFormat::Human;

  std::optional<long> k;
  std::string a;        // "a1,a2" or, for spherical, a single integer
  std::string b;        // pole orders, or spherical b
  std::string roots;    // comma separated cyclotomic expressions
  std::optional<long> conductor;
  std::string numeric;  // flat re,im list
  std::optional<double> tol;
  std::string subset;   // one-based indices
  std::string c;        // spherical angles
};

/// Parses argv-style arguments (without the program name). Returns an exit
/// status instead when parsing ends early (help, or a usage error already
/// reported on `err`).
struct ParseOutcome {
  std::optional<CommandRequest> request;
  int status = kOk;
};
ParseOutcome parse_request(const std::vector<std::string>& args, std::ostream& out,
                           std::ostream& err);

/// Executes the request, writing the result to `out` and errors to `err`.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_request followed by run.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isores::cli
