#pragma once

#include <functional>
#include <string>
#include <vector>

namespace colorgame {

// One theorem-traceability check. Failures are data: `pass` is false and
// `computed` / `details` say why.
struct CheckResult {
  int id = 0;
  std::string title;
  std::string basis;     // the result being reproduced, in words
  std::string expected;  // the pinned threshold or value
  std::string computed;
  bool pass = false;
  bool slow = false;
  double seconds = 0;
  double time_limit = 0;  // seconds; exceeding it fails the check
  std::vector<std::string> details;
};

enum class VerifyScope { fast, all };

struct VerifyOptions {
  VerifyScope scope = VerifyScope::fast;
  int jobs = 1;
  // Called after each check finishes, for streaming output.
  std::function<void(const CheckResult&)> on_result;
};

// Runs checks 1..13 in order; the slow check (7) only in VerifyScope::all.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

// Single check by id (1..13). Throws ValidationError for an unknown id.
CheckResult run_check(int id, int jobs = 1);

int check_count();
bool check_is_slow(int id);

}  // namespace colorgame
