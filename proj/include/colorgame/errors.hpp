#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colorgame {

// Input does not satisfy a documented precondition (bad graph, invalid
// payoff table, parameter outside a theorem's regime, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// base^exp, saturating at the largest uint64 value. Sizes the enumerations
// guarded by BudgetExceeded.
inline std::uint64_t saturating_power(int base, int exp) {
  const std::uint64_t b = static_cast<std::uint64_t>(base);
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (b != 0 && out > UINT64_MAX / b) return UINT64_MAX;
    out *= b;
  }
  return out;
}

// A proven statement failed on concrete data. Never expected to fire.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace colorgame
