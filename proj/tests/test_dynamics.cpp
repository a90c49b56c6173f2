#include "doctest.h"

#include "colorgame/dynamics.hpp"
#include "colorgame/errors.hpp"
#include "colorgame/random_instances.hpp"
#include "oracles.hpp"

using namespace colorgame;

namespace {

void check_trace(const Graph& g, const PayoffTable& f, const Coloring& start, const DynamicsTrace& trace) {
  Coloring c = start;
  Rational last = welfare(g, f, start);
  CHECK(trace.initial_welfare == last);
  for (const auto& step : trace.steps) {
    CHECK(step.from == c(step.vertex));
    CHECK(player_payoff(g, f, change(c, step.vertex, step.to), step.vertex) >
          player_payoff(g, f, c, step.vertex));
    c = change(c, step.vertex, step.to);
    CHECK(step.welfare_after == welfare(g, f, c));
    CHECK(step.welfare_after > last);
    last = step.welfare_after;
  }
  CHECK(c == trace.final_coloring);
  CHECK(oracle::stable_by_definition(g, f, trace.final_coloring));
}

}  // namespace

TEST_CASE("dynamics from a stable start makes no moves") {
  const Graph g = complete_bipartite(2, 2);
  const auto trace = run_improvement_dynamics(g, distance(4), Coloring({1, 4, 2, 3}));
  CHECK(trace.step_count() == 0);
  CHECK(trace.final_coloring == Coloring({1, 4, 2, 3}));
}

TEST_CASE("dynamics under basic payoff use at most m steps") {
  InstanceGenerator gen(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform_int(2, 20);
    const int k = gen.uniform_int(2, 5);
    const Graph g = gen.graph(n, gen.uniform_int(10, 60));
    const Coloring start = gen.coloring(n, k);
    for (const Schedule schedule : {Schedule::round_robin(), Schedule::random(trial)}) {
      const auto trace = run_improvement_dynamics(g, basic(k), start, schedule);
      CHECK(trace.step_count() <= g.edge_count());
      check_trace(g, basic(k), start, trace);
    }
  }
}

TEST_CASE("dynamics reach stable colorings for every payoff and move rule") {
  InstanceGenerator gen(52);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform_int(2, 9);
    const int k = gen.uniform_int(2, 6);
    const Graph g = gen.graph(n);
    const Coloring start = gen.coloring(n, k);
    for (const auto& f : {basic(k), coordination(k), distance(k), cyclic(k), gen.concave_table(k)}) {
      for (MoveRule rule : {MoveRule::best_response, MoveRule::first_improvement}) {
        check_trace(g, f, start, run_improvement_dynamics(g, f, start, Schedule::random(7), rule));
      }
    }
  }
}

TEST_CASE("random schedule is reproducible") {
  InstanceGenerator gen(53);
  const Graph g = gen.graph(12);
  const Coloring start = gen.coloring(12, 4);
  const auto a = run_improvement_dynamics(g, cyclic(4), start, Schedule::random(99));
  const auto b = run_improvement_dynamics(g, cyclic(4), start, Schedule::random(99));
  CHECK(a.final_coloring == b.final_coloring);
  CHECK(a.step_count() == b.step_count());
}

TEST_CASE("quick_response examples") {
  const std::vector<Color> low{1, 2};
  CHECK(quick_response(low, distance(4)) == 4);
  CHECK(response_payoff(low, distance(4), 4) == 5);
  CHECK(response_payoff(low, distance(4), 4) >= Rational(2 * 3, 4));

  const std::vector<Color> high{4, 5, 5};
  CHECK(quick_response(high, cyclic(5)) == 2);
  for (Color c : high) CHECK(cyclic(5)(std::abs(c - 2)) >= 1);

  for (int k = 2; k <= 9; ++k) {
    for (const auto& f : {basic(k), distance(k), cyclic(k)}) {
      for (Color c = 1; c <= k; ++c) {
        const std::vector<Color> one{c};
        CHECK(4 * response_payoff(one, f, quick_response(one, f)) >= f.f_star());
      }
    }
  }
}

TEST_CASE("quick_response preconditions") {
  const std::vector<Color> none;
  const std::vector<Color> some{1, 2};
  const std::vector<Color> bad{1, 7};
  CHECK_THROWS_AS(quick_response(some, coordination(3)), ValidationError);
  CHECK_THROWS_AS(quick_response(none, basic(3)), ValidationError);
  CHECK_THROWS_AS(quick_response(bad, basic(3)), ValidationError);
  // Concave but negative at k: the midpoint response can land on a zero.
  const PayoffTable dip = PayoffTable::from_values({Rational(0), Rational(1), Rational(0), Rational(-1)});
  REQUIRE(dip.is_concave());
  const std::vector<Color> top{3};
  CHECK(response_payoff(top, dip, 1) == 0);
  CHECK_THROWS_AS(quick_response(top, dip), ValidationError);
}

TEST_CASE("quick_response guarantee on random instances") {
  InstanceGenerator gen(54);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = gen.uniform_int(2, 20);
    const int nu = gen.uniform_int(1, 12);
    const std::vector<Color> colors = gen.colors(nu, k);
    for (const auto& f : {basic(k), distance(k), cyclic(k), gen.concave_table(k),
                          prototype(gen.uniform_int(1, k - 1), k)}) {
      if (!is_concave_nonnegative(f)) continue;
      const Color t = quick_response(colors, f);
      CHECK(4 * response_payoff(colors, f, t) >= nu * f.f_star());
    }
  }
}

TEST_CASE("lift_stable examples") {
  const Coloring path = lift_stable(path_graph(3), LiftMode::distance, 5, Coloring({1, 2, 1}));
  CHECK(path == Coloring({1, 5, 1}));
  CHECK(is_stable(path_graph(3), distance(5), path));

  const Coloring cycle = lift_stable(cycle_graph(4), LiftMode::cyclic_even, 6, Coloring({1, 2, 1, 2}));
  CHECK(cycle == Coloring({1, 4, 1, 4}));
  CHECK(is_stable(cycle_graph(4), cyclic(6), cycle));

  CHECK_THROWS_AS(lift_stable(path_graph(2), LiftMode::distance, 4, Coloring({1, 1})), ValidationError);
  CHECK_THROWS_AS(lift_stable(cycle_graph(4), LiftMode::cyclic_even, 5, Coloring({1, 2, 1, 2})),
                  ValidationError);
}

TEST_CASE("lifting stable two-colorings of random graphs") {
  InstanceGenerator gen(55);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform_int(2, 14);
    const Graph g = gen.graph(n);
    const Coloring two =
        run_improvement_dynamics(g, basic(2), gen.coloring(n, 2), Schedule::random(trial)).final_coloring;
    for (int k = 2; k <= 10; ++k) {
      CHECK(is_stable(g, distance(k), lift_stable(g, LiftMode::distance, k, two)));
      if (k % 2 == 0) CHECK(is_stable(g, cyclic(k), lift_stable(g, LiftMode::cyclic_even, k, two)));
    }
  }
}
