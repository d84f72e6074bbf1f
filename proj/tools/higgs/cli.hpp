#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace higgs::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;
inline constexpr int data = 3;
inline constexpr int precondition = 4;
}  // namespace exit_code

/// Defaults taken from the process environment: HIGGS_PRIME (default
/// prime) and HIGGS_LOG (JSONL log used when --out is absent).
struct Environment {
  std::optional<std::string> default_prime;
  std::optional<std::string> log_path;
};

Environment process_environment();

/// One executed command: what ran, with which parameters, and its result.
struct Invocation {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json params;
  nlohmann::json payload;
  std::string format = "json";
  std::string out_path;
  bool timestamp = true;
};

/// Parses and runs one command without printing or logging. Throws
/// CLI11 parse errors, DataError and PreconditionError.
Invocation execute(const std::vector<std::string>& args, const Environment& env);

/// Full command-line behavior: prints the payload in the requested format,
/// appends the experiment record, maps errors to exit codes with a one-line
/// diagnostic on `err`. Appends to one log from concurrent runs are not
/// supported.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env);

/// The record line appended to the log (without trailing newline).
std::string record_line(const Invocation& inv, double elapsed_ms);

}  // namespace higgs::cli
