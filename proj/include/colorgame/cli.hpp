#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace colorgame {

enum class OutputFormat { json, csv };

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify found a failing check
inline constexpr int kExitInvalid = 2;      // bad input or precondition
inline constexpr int kExitBudget = 3;       // enumeration refused
inline constexpr int kExitTheorem = 4;      // a proven statement failed

struct RunConfig {
  std::string command;  // poa | local-param | split-search | split-min | gadget | dynamics | bound | verify
  std::string payoff;
  std::optional<int> k;
  std::string graph_path;
  std::uint64_t budget = 10'000'000;
  std::string delta;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  bool pretty = false;
  int jobs = 1;

  // gadget
  std::string family;
  std::string a = "1";
  std::string b = "0";
  int n = 1;
  std::string out_prefix;

  // dynamics
  std::string start_path;
  std::string schedule = "round-robin";
  std::string rule = "best";

  // verify
  std::string scope = "fast";
};

// Executes one command, writing the report to `out` and diagnostics to `err`.
// Returns one of the kExit* statuses.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and calls run(). The default budget comes from
// the COLORGAME_BUDGET environment variable when set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace colorgame
