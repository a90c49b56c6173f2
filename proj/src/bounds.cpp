#include "colorgame/bounds.hpp"

#include "colorgame/errors.hpp"
#include "colorgame/local_parameter.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace colorgame {

BoundReport upper_bounds(const PayoffTable& f) {
  const int k = f.k();
  BoundReport report;
  auto add = [&](std::string rule, Rational bound, std::string basis) {
    report.applicable.push_back({std::move(rule), std::move(bound), std::move(basis)});
  };

  if (is_constant_on_distances(f)) {
    add("constant", 1, "every color earns f* against every neighbor");
  }
  if (is_affine(f)) {
    const Rational slope = f(1) - f(0);
    if (slope > 0) {
      add("affine", rho_affine(slope, f(0), k),
          "splitting rho/2 on colors 1 and k for f(x) = ax + b; tight on K_{2,2}");
    } else if (slope < 0) {
      add("decreasing-affine", rho_decreasing(-slope, f(0), k),
          "splitting rho'/2 on colors 1 and k for f(x) = b - ax; tight on K_{2,2}");
    }
  }
  if (f.is_concave() && !is_constant_on_distances(f)) {
    const Rational secant = (f(k - 1) - f(0)) / (k - 1);
    if (is_non_decreasing(f)) {
      add("concave-non-decreasing", rho_affine(secant, f(0), k),
          "concave non-decreasing f dominates its secant line on 0..k-1");
    } else if (is_non_increasing(f)) {
      add("concave-non-increasing", rho_decreasing(-secant, f(0), k),
          "concave non-increasing f dominates its secant line on 0..k-1");
    }
  }
  if (proportional_to(f, cyclic(k))) {
    add("cyclic", 2, "splitting 1 + 1 on colors 1 and floor(k/2)+1; tight for even k");
  }
  if (is_concave_nonnegative(f)) {
    add("concave", 4, "constructive response earning a quarter of the maximum");
    const auto star = dis_star(f);
    const bool left = std::any_of(star.begin(), star.end(),
                                  [&](int l) { return l >= 1 && l <= k / 2 && l <= k - 2; });
    const bool right = std::any_of(star.begin(), star.end(),
                                   [&](int l) { return l > k / 2 && l <= k - 2; });
    if (left) add("tent-left", 2, "maximum at a distance <= floor(k/2): two-color splitting");
    if (right) add("tent-general", 3, "maximum right of the middle: three-color splitting");
  }
  if (proportional_to(f, distance(k))) {
    add("distance-mean-value", 2 * k, "move half a spectrum away from the largest color class");
  }
  if (proportional_to(f, coordination(k))) {
    add("coordination-mean-value", k, "join the largest color class; tight on K_{k,k}");
  }

  for (const auto& e : report.applicable) {
    if (!report.best || e.bound < *report.best) report.best = e.bound;
  }
  return report;
}

namespace {

Gadget finish_gadget(std::string family, Graph graph, PayoffTable payoff, Coloring stable,
                     Coloring opt) {
  const int k = payoff.k();
  validate_coloring(graph, k, stable);
  validate_coloring(graph, k, opt);
  if (const auto check = is_stable(graph, payoff, stable); !check) {
    throw TheoremViolation(family + " gadget coloring is not stable (vertex " +
                           std::to_string(check.witness->vertex) + " moves to " +
                           std::to_string(check.witness->to) + ")");
  }
  Rational stable_welfare = welfare(graph, payoff, stable);
  Rational opt_welfare = welfare(graph, payoff, opt);
  if (stable_welfare == 0) throw ValidationError(family + " gadget has zero stable welfare");
  Rational ratio = opt_welfare / stable_welfare;
  return Gadget{std::move(family),       std::move(graph),       k,
                std::move(payoff),       std::move(stable),      std::move(opt),
                std::move(stable_welfare), std::move(opt_welfare), std::move(ratio)};
}

}  // namespace

Gadget gadget_affine(const Rational& a, const Rational& b, int k) {
  return finish_gadget("affine", complete_bipartite(2, 2), affine(a, b, k),
                       Coloring({1, k, (k + 1) / 2, (k + 2) / 2}), Coloring({1, 1, k, k}));
}

Gadget gadget_decreasing(const Rational& a, const Rational& b, int k) {
  return finish_gadget("decreasing", complete_bipartite(2, 2), decreasing_affine(a, b, k),
                       Coloring({1, k, 1, k}), Coloring({1, 1, 1, 1}));
}

Coloring cyclic_pair_pattern(int k, int n) {
  if (n < 1) throw ValidationError("cycle repetition count must be >= 1");
  const Color k1 = k / 2 + 1;
  std::vector<Color> colors;
  for (int i = 0; i < 4 * n; ++i) colors.push_back(i % 4 < 2 ? 1 : k1);
  return Coloring(std::move(colors));
}

Gadget gadget_cyclic_even(int k, int n) {
  if (k < 2 || k % 2 != 0) throw ValidationError("even-cycle gadget needs even k >= 2");
  const Color k1 = k / 2 + 1;
  std::vector<Color> opt;
  for (int i = 0; i < 4 * n; ++i) opt.push_back(i % 2 == 0 ? 1 : k1);
  return finish_gadget("cyclic-even", cycle_graph(4 * n), cyclic(k), cyclic_pair_pattern(k, n),
                       Coloring(std::move(opt)));
}

Gadget gadget_cyclic_odd(int k, int n) {
  if (k < 3 || k % 2 == 0) throw ValidationError("odd-cycle gadget needs odd k >= 3");
  if (n < 1) throw ValidationError("cycle repetition count must be >= 1");
  const Color k1 = k / 2 + 1;
  const Color k2 = k1 + 1;
  std::vector<Color> stable;
  std::vector<Color> opt;
  for (int i = 0; i < 6 * n; ++i) {
    stable.push_back(i % 3 == 0 ? 1 : (i % 3 == 1 ? k1 : k2));
    opt.push_back(i % 2 == 0 ? 1 : k1);
  }
  return finish_gadget("cyclic-odd", cycle_graph(6 * n), cyclic(k), Coloring(std::move(stable)),
                       Coloring(std::move(opt)));
}

Gadget gadget_coordination(int k) {
  if (k < 2) throw ValidationError("coordination gadget needs k >= 2");
  std::vector<Color> stable;
  for (int side = 0; side < 2; ++side) {
    for (Color i = 1; i <= k; ++i) stable.push_back(i);
  }
  return finish_gadget("coordination", complete_bipartite(k, k), coordination(k),
                       Coloring(std::move(stable)), Coloring(std::vector<Color>(2 * k, 1)));
}

Rational mean_value_bound_distance(int k) {
  if (k < 2) throw ValidationError("spectrum size k must be >= 2");
  return 2 * k;
}

Color mean_value_deviation(std::span<const Color> neighbor_colors, int k) {
  if (neighbor_colors.empty()) throw ValidationError("need at least one neighbor color");
  std::map<Color, int> classes;
  for (Color c : neighbor_colors) {
    if (c < 1 || c > k) throw ValidationError("neighbor color " + std::to_string(c) + " out of range");
    ++classes[c];
  }
  const auto largest = std::max_element(
      classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  const Color t = largest->first;
  return t + k / 2 <= k ? t + k / 2 : t - k / 2;
}

}  // namespace colorgame
