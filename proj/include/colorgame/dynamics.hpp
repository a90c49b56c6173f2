#pragma once

#include "colorgame/game.hpp"
#include "colorgame/graph.hpp"
#include "colorgame/payoff.hpp"
#include "colorgame/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace colorgame {

struct DynamicsStep {
  Vertex vertex;
  Color from;
  Color to;
  Rational welfare_after;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  Coloring final_coloring;
  Rational initial_welfare;

  int step_count() const { return static_cast<int>(steps.size()); }
};

enum class ScheduleKind { round_robin, random };

struct Schedule {
  ScheduleKind kind = ScheduleKind::round_robin;
  std::uint64_t seed = 0;  // random only

  static Schedule round_robin() { return {}; }
  static Schedule random(std::uint64_t seed) { return {ScheduleKind::random, seed}; }
};

enum class MoveRule {
  best_response,      // move to the best response (default)
  first_improvement,  // move to the smallest strictly improving color
};

// Sweeps over the vertices (1..n for round robin, a fresh seeded permutation
// per sweep for random) letting each vertex move if it can strictly improve.
// Stops after a sweep without moves; the final coloring is stable. Welfare
// rises strictly with every step, which bounds the run.
DynamicsTrace run_improvement_dynamics(const Graph& g, const PayoffTable& f, const Coloring& start,
                                       Schedule schedule = {},
                                       MoveRule rule = MoveRule::best_response);

// Constructive response for a concave non-negative f against neighbor colors.
// With k* the smallest maximizer of f: if at least half of the neighbors use
// colors <= floor(k/2) the answer is ceil((k+k*)/2), otherwise
// ceil((k-k*)/2). Guarantees a payoff of at least |colors| * f* / 4.
// Throws ValidationError for non-concave (or negative at k) tables and empty
// input.
Color quick_response(std::span<const Color> neighbor_colors, const PayoffTable& f);

// sum_i f(|colors_i - t|)
Rational response_payoff(std::span<const Color> neighbor_colors, const PayoffTable& f, Color t);

enum class LiftMode { distance, cyclic_even };

// Turns a coloring in {1,2} that is stable under basic(2) into a stable
// coloring for distance payoff (2 -> k) or, for even k, cyclic payoff
// (2 -> k/2 + 1). Throws ValidationError if the input is not stable under
// basic(2) or k is odd in cyclic mode. The result is checked with is_stable.
Coloring lift_stable(const Graph& g, LiftMode mode, int k, const Coloring& two_coloring);

}  // namespace colorgame
