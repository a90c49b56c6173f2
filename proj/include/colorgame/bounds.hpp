#pragma once

#include "colorgame/game.hpp"
#include "colorgame/graph.hpp"
#include "colorgame/payoff.hpp"
#include "colorgame/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace colorgame {

struct BoundEntry {
  std::string rule;
  Rational bound;
  std::string basis;  // the result the bound comes from, in words
};

struct BoundReport {
  std::vector<BoundEntry> applicable;
  std::optional<Rational> best;  // minimum of the applicable bounds
};

// Every known upper bound on the price of anarchy whose hypotheses f meets.
// Hypotheses are decided on the table itself (affine, monotone, concave,
// proportional to a named family, location of the maximizers), never on the
// constructor name.
BoundReport upper_bounds(const PayoffTable& f);

// A concrete instance witnessing a lower bound on the price of anarchy.
struct Gadget {
  std::string family;
  Graph graph;
  int k;
  PayoffTable payoff;
  Coloring stable_coloring;
  Coloring opt_coloring;
  Rational stable_welfare;
  Rational opt_welfare;
  Rational ratio;  // opt_welfare / stable_welfare
};

// K_{2,2} (u1=1, u2=2 | w1=3, w2=4), f = a x + b, stable coloring
// (1, k, floor((k+1)/2), ceil((k+1)/2)), optimum (1,1,k,k). Ratio rho(a,b,k).
Gadget gadget_affine(const Rational& a, const Rational& b, int k);
// K_{2,2}, f = b - a x, stable coloring (1,k,1,k), optimum all 1. Ratio rho'.
Gadget gadget_decreasing(const Rational& a, const Rational& b, int k);
// Cycle of length 4n under cyclic payoff, colored 1,1,k1,k1,... with
// k1 = k/2 + 1; optimum alternates 1 and k1. Even k only. Ratio 2.
Gadget gadget_cyclic_even(int k, int n);
// Cycle of length 6n under cyclic payoff, colored 1,k1,k2,1,k1,k2,... with
// k1 = floor(k/2) + 1, k2 = k1 + 1. Odd k only. Ratio (3/2)(1 - 1/k).
Gadget gadget_cyclic_odd(int k, int n);
// K_{k,k} under coordination payoff with c(v_i) = c(w_i) = i. Ratio k.
Gadget gadget_coordination(int k);

// The 1,1,k1,k1,... pattern on a 4n-cycle for any k (k1 = floor(k/2) + 1).
// Stable for even k only.
Coloring cyclic_pair_pattern(int k, int n);

// 2k: the bound for distance payoff obtained by moving half a spectrum away
// from the largest neighbor color class.
Rational mean_value_bound_distance(int k);

// The deviation behind mean_value_bound_distance: t + floor(k/2) if that is a
// color, else t - floor(k/2), where t is the most frequent neighbor color
// (smallest on ties).
Color mean_value_deviation(std::span<const Color> neighbor_colors, int k);

}  // namespace colorgame
