#pragma once

#include "colorgame/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace colorgame {

// Payoff function f sampled at the integer distances 0..k. Only f(0..k-1) is
// ever evaluated by the game; f(k) participates in the concavity check, which
// stands in for concavity on the whole interval [0,k].
//
// Invariants established by from_values():
//   * k >= 2,
//   * f(i) >= 0 for i in 0..k-1,
//   * f* = max f(0..k-1) > 0,
//   * f(k) < 0 only if the table is concave,
//   * concave tables are positive on 1..k-2.
class PayoffTable {
 public:
  static PayoffTable from_values(std::vector<Rational> values, std::string name = {});

  int k() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator()(int distance) const { return values_[distance]; }
  std::span<const Rational> values() const { return values_; }
  const std::string& name() const { return name_; }

  // f(i+1) - f(i) is non-increasing over 0..k.
  bool is_concave() const { return concave_; }
  const Rational& f_star() const { return f_star_; }

  friend bool operator==(const PayoffTable& a, const PayoffTable& b) {
    return a.values_ == b.values_;
  }

 private:
  PayoffTable() = default;

  std::vector<Rational> values_;
  std::string name_;
  bool concave_ = false;
  Rational f_star_;
};

// Built-in families.
PayoffTable basic(int k);         // 0 at distance 0, 1 elsewhere
PayoffTable coordination(int k);  // 1 at distance 0, 0 elsewhere
PayoffTable distance(int k);      // f(x) = x
PayoffTable cyclic(int k);        // f(x) = min(x, k - x)
PayoffTable affine(const Rational& a, const Rational& b, int k);             // a x + b
PayoffTable decreasing_affine(const Rational& a, const Rational& b, int k);  // b - a x
// Tent rising linearly to 1 at `peak`, falling linearly to 0 at k.
// 1 <= peak <= k - 1.
PayoffTable prototype(int peak, int k);

Rational f_star(const PayoffTable& f);
// Distances in 0..k-1 where f attains f*, ascending.
std::vector<int> dis_star(const PayoffTable& f);
PayoffTable scale(const PayoffTable& f, const Rational& gamma);

// Exact shape predicates on the table.
bool is_affine(const PayoffTable& f);               // zero second differences on 0..k
bool is_non_decreasing(const PayoffTable& f);       // on 0..k-1
bool is_non_increasing(const PayoffTable& f);       // on 0..k-1
bool is_constant_on_distances(const PayoffTable& f);  // on 0..k-1
bool positive_on_positive_distances(const PayoffTable& f);  // f(i) > 0 on 1..k-1
// f = gamma * g for some gamma > 0, compared on all of 0..k.
bool proportional_to(const PayoffTable& f, const PayoffTable& g);

// Concave and non-negative on the whole of 0..k; the hypothesis of the
// general concave bounds (the constructive response and the tent transfer).
bool is_concave_nonnegative(const PayoffTable& f);

// Every color p has some color s with f(|s-p|) > 0. Exactly the condition
// under which the local parameter is finite.
bool covers_every_color(const PayoffTable& f);

}  // namespace colorgame
