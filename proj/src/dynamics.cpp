#include "colorgame/dynamics.hpp"

#include "colorgame/errors.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace colorgame {

namespace {

// Fisher-Yates with an explicit bounded draw so sequences do not depend on the
// standard library's distribution implementation.
void shuffle_vertices(std::vector<Vertex>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(order[i - 1], order[draw % bound]);
  }
}

}  // namespace

DynamicsTrace run_improvement_dynamics(const Graph& g, const PayoffTable& f, const Coloring& start,
                                       Schedule schedule, MoveRule rule) {
  validate_coloring(g, f.k(), start);
  DynamicsTrace trace;
  trace.initial_welfare = welfare(g, f, start);
  Coloring c = start;
  Rational current_welfare = trace.initial_welfare;

  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 1);
  std::mt19937_64 rng(schedule.seed);

  for (bool moved = true; moved;) {
    moved = false;
    if (schedule.kind == ScheduleKind::random) shuffle_vertices(order, rng);
    for (Vertex v : order) {
      const Rational before = player_payoff(g, f, c, v);
      Color target = c(v);
      Rational after = before;
      if (rule == MoveRule::best_response) {
        BestResponse br = best_response(g, f, c, v);
        target = br.color;
        after = std::move(br.payoff);
      } else {
        for (Color t = 1; t <= f.k(); ++t) {
          Rational p = payoff_with_color(g, f, c, v, t);
          if (p > before) {
            target = t;
            after = std::move(p);
            break;
          }
        }
      }
      if (after <= before) continue;
      const Color from = c(v);
      c = change(c, v, target);
      // Only edges at v change; each contributes twice to welfare.
      current_welfare += 2 * (after - before);
      trace.steps.push_back({v, from, target, current_welfare});
      moved = true;
    }
  }
  trace.final_coloring = std::move(c);
  return trace;
}

Rational response_payoff(std::span<const Color> neighbor_colors, const PayoffTable& f, Color t) {
  Rational sum = 0;
  for (Color c : neighbor_colors) sum += f(std::abs(c - t));
  return sum;
}

Color quick_response(std::span<const Color> neighbor_colors, const PayoffTable& f) {
  if (!is_concave_nonnegative(f)) {
    throw ValidationError("quick response needs f concave and non-negative on 0..k");
  }
  if (neighbor_colors.empty()) throw ValidationError("quick response needs at least one neighbor");
  const int k = f.k();
  const int peak = dis_star(f).front();
  std::size_t low = 0;
  for (Color c : neighbor_colors) {
    if (c < 1 || c > k) throw ValidationError("neighbor color " + std::to_string(c) + " out of range");
    if (c <= k / 2) ++low;
  }
  if (2 * low >= neighbor_colors.size()) return (k + peak + 1) / 2;
  return (k - peak + 1) / 2;
}

Coloring lift_stable(const Graph& g, LiftMode mode, int k, const Coloring& two_coloring) {
  validate_coloring(g, 2, two_coloring);
  if (const auto check = is_stable(g, basic(2), two_coloring); !check) {
    throw ValidationError("input 2-coloring is not stable under basic payoff (vertex " +
                          std::to_string(check.witness->vertex) + " can improve)");
  }
  Color replacement = k;
  PayoffTable target = distance(k);
  if (mode == LiftMode::cyclic_even) {
    if (k % 2 != 0) throw ValidationError("cyclic lifting needs even k, got " + std::to_string(k));
    replacement = k / 2 + 1;
    target = cyclic(k);
  }
  std::vector<Color> colors;
  for (Color c : two_coloring.colors()) colors.push_back(c == 2 ? replacement : 1);
  Coloring lifted(std::move(colors));
  if (!is_stable(g, target, lifted)) {
    throw TheoremViolation("lifted coloring is not stable");
  }
  return lifted;
}

}  // namespace colorgame
