#pragma once

#include "colorgame/payoff.hpp"
#include "colorgame/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace colorgame {

// Non-negative weights on colors 1..k; weight(s) is the weight on color s.
// A splitting satisfying condition(*) for f certifies
//   local parameter of f  <=  total().
class Splitting {
 public:
  Splitting() = default;
  explicit Splitting(std::vector<Rational> weights);

  int k() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int color) const { return weights_[color - 1]; }
  std::span<const Rational> weights() const { return weights_; }
  Rational total() const;

  friend bool operator==(const Splitting&, const Splitting&) = default;

 private:
  std::vector<Rational> weights_;
};

// Probability weights on colors 1..k, summing to exactly one.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<Rational> weights);

  int k() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int color) const { return weights_[color - 1]; }
  std::span<const Rational> weights() const { return weights_; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<Rational> weights_;
};

// For every color t: sum over colors p of weights[p] * f(|p - t|).
std::vector<Rational> response_profile(const PayoffTable& f, std::span<const Rational> weights);

struct SplittingCheck {
  bool satisfied = true;
  std::optional<int> violated_at;  // smallest p with coverage below f*
  Rational coverage_at_violation;

  explicit operator bool() const { return satisfied; }
};

// Condition(*): sum_s weight(s) * f(|s - p|) >= f* for every p in 1..k.
SplittingCheck verify_splitting(const PayoffTable& f, const Splitting& s);

// f* / max_t sum_p mu_p f(|p - t|): a certified lower bound on the local
// parameter. Throws ValidationError if the denominator vanishes.
Rational dual_bound(const PayoffTable& f, const Distribution& mu);

struct LocalParamResult {
  Rational value;
  Splitting optimal_splitting;
  Distribution worst_distribution;
  Rational dual_value;
  int pivots = 0;
};

// Exact local parameter of f: the least total of a splitting satisfying
// condition(*), found by exact simplex pivoting. The optimal dual solution,
// normalized to a distribution, attains the same value through dual_bound.
//
// The local parameter is a maximum over neighbor color multisets; after
// normalizing a multiset to a distribution mu it reads
//   f* / min_mu max_t sum_p mu_p f(|p - t|),
// and the inner min-max is exactly the linear-programming dual of the
// splitting program. So the splitting bound is never lossy and the result is
// the local parameter itself, not only an upper bound.
//
// Throws ValidationError when some color p cannot be covered
// (covers_every_color(f) is false): the local parameter is infinite then.
LocalParamResult minimal_splitting(const PayoffTable& f);

// All distinct splittings lambda(v), v in [k]^r, lambda_s(v) = sum of
// delta_i over i with v_i = s, that satisfy condition(*). Sorted
// lexicographically by weight vector. Throws BudgetExceeded if k^r > budget.
std::vector<Splitting> delta_grid_search(const PayoffTable& f, std::span<const Rational> delta,
                                         std::uint64_t budget = 10'000'000, int jobs = 1);

enum class SplittingFamily { affine, decreasing, cyclic, left, general };

struct SplittingRecipe {
  SplittingFamily family;
  int peak = 0;  // used by left and general
};

// Closed-form splittings for the families with known bounds:
//   affine      f = a x + b:     weight rho/2 on colors 1 and k
//   decreasing  f = b - a x:     weight rho'/2 on colors 1 and k
//   cyclic      f ~ min(x,k-x):  weight 1 on colors 1 and floor(k/2)+1
//   left(l)     l < ceil(k/2):   weight 1 on colors ceil(k/2) and ceil(k/2)-l
//   general(l)  l > floor(k/2):  weight 1 on colors 1, between_index(l,k), l+1
// left/general require f concave and non-negative on 0..k with f(l) = f*.
// Throws ValidationError when f is outside the recipe's regime.
Splitting theorem_splitting(const PayoffTable& f, SplittingRecipe recipe);

// Smallest integer i with 2 <= i <= l and
//   (k-l)(2l-k)/l <= i <= l(k-l)/(2l-k) + 1.
// Requires floor(k/2) < l <= k-1. Throws TheoremViolation if none exists.
int between_index(int peak, int k);

// rho(a,b,k) = 2(a(k-1)+b) / (a(k-1)+2b).
Rational rho_affine(const Rational& a, const Rational& b, int k);
// rho'(a,b,k) = 2b / (2b - a(k-1)).
Rational rho_decreasing(const Rational& a, const Rational& b, int k);

// Local parameter of the tent prototype(l, k), an upper bound for every
// concave non-negative f peaking at distance l (l not 0 or k-1).
Rational transfer_bound(const PayoffTable& f, int peak);

}  // namespace colorgame
