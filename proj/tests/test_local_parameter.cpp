#include "doctest.h"

#include "colorgame/errors.hpp"
#include "colorgame/exhaustive.hpp"
#include "colorgame/local_parameter.hpp"
#include "colorgame/random_instances.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>

using namespace colorgame;

namespace {

Splitting unit_splitting(int k, std::initializer_list<int> colors) {
  std::vector<Rational> w(k, Rational(0));
  for (int c : colors) w[c - 1] += 1;
  return Splitting(std::move(w));
}

Distribution uniform(int k) { return Distribution(std::vector<Rational>(k, Rational(1, k))); }

bool contains(const std::vector<Splitting>& list, const Splitting& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

Integer lcm_of_denominators(const Distribution& mu) {
  Integer l = 1;
  for (const auto& w : mu.weights()) l = lcm(l, denominator(w));
  return l;
}

}  // namespace

TEST_CASE("verify_splitting examples") {
  for (int k = 2; k <= 12; k += 2) CHECK(verify_splitting(cyclic(k), unit_splitting(k, {1, k / 2 + 1})));

  for (const auto& [a, b, k] : std::vector<std::tuple<Rational, Rational, int>>{
           {1, 0, 4}, {Rational(1, 2), 3, 7}, {2, Rational(1, 3), 2}}) {
    std::vector<Rational> w(k, Rational(0));
    w.front() += rho_affine(a, b, k) / 2;
    w.back() += rho_affine(a, b, k) / 2;
    CHECK(verify_splitting(affine(a, b, k), Splitting(w)));
  }

  const auto check = verify_splitting(basic(3), unit_splitting(3, {1}));
  CHECK_FALSE(check.satisfied);
  REQUIRE(check.violated_at);
  CHECK(*check.violated_at == 1);
  CHECK(check.coverage_at_violation == 0);
}

TEST_CASE("splitting and distribution validation") {
  CHECK_THROWS_AS(Splitting({Rational(1), Rational(-1, 2)}), ValidationError);
  CHECK_THROWS_AS(Distribution({Rational(1, 2), Rational(1, 3)}), ValidationError);
  CHECK_THROWS_AS(Distribution({Rational(3, 2), Rational(-1, 2)}), ValidationError);
  CHECK(Splitting({Rational(1, 2), Rational(1, 3)}).total() == Rational(5, 6));
}

TEST_CASE("minimal_splitting on basic(3)") {
  // Independent value: enumerate neighbor triples.
  CHECK(oracle::tuple_local_parameter(basic(3), 3) == Rational(3, 2));

  const auto r = minimal_splitting(basic(3));
  CHECK(r.value == Rational(3, 2));
  CHECK(r.dual_value == Rational(3, 2));
  CHECK(r.optimal_splitting == Splitting({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK(r.worst_distribution == uniform(3));
}

TEST_CASE("minimal_splitting on coordination") {
  for (int k = 2; k <= 8; ++k) {
    const auto r = minimal_splitting(coordination(k));
    CHECK(r.value == k);
    CHECK(r.worst_distribution == uniform(k));
  }
}

TEST_CASE("minimal_splitting on cyclic(4) and distance") {
  CHECK(minimal_splitting(cyclic(4)).value == 2);
  for (int k = 2; k <= 15; ++k) CHECK(minimal_splitting(distance(k)).value == 2);
}

TEST_CASE("minimal_splitting certificates") {
  InstanceGenerator gen(31);
  std::vector<PayoffTable> tables{basic(5), coordination(4), distance(6), cyclic(7),
                                  prototype(2, 9), decreasing_affine(1, 4, 4)};
  for (int i = 0; i < 40; ++i) tables.push_back(gen.concave_table(gen.uniform_int(2, 12)));
  for (const auto& f : tables) {
    const auto r = minimal_splitting(f);
    CHECK(r.optimal_splitting.total() == r.value);
    CHECK(verify_splitting(f, r.optimal_splitting));
    CHECK(dual_bound(f, r.worst_distribution) == r.value);
    CHECK(r.dual_value == r.value);
    CHECK(r.value >= 1);
  }
}

TEST_CASE("dual_bound examples") {
  CHECK(dual_bound(basic(2), uniform(2)) == 2);
  for (int k = 2; k <= 6; ++k) {
    for (int p = 1; p <= k; ++p) {
      std::vector<Rational> point(k, Rational(0));
      point[p - 1] = 1;
      CHECK(dual_bound(basic(k), Distribution(point)) == 1);
    }
  }
  const auto r = minimal_splitting(cyclic(5));
  CHECK(dual_bound(cyclic(5), r.worst_distribution) == r.value);
}

TEST_CASE("weak duality on random certificates") {
  InstanceGenerator gen(32);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = gen.uniform_int(2, 7);
    const PayoffTable f = gen.concave_table(k);
    std::vector<Rational> raw;
    for (int p = 0; p < k; ++p) raw.push_back(gen.small_rational(3, 4));
    Rational sum = std::accumulate(raw.begin(), raw.end(), Rational(0));
    if (sum == 0) continue;
    for (auto& w : raw) w /= sum;
    const Distribution mu(raw);
    std::vector<Rational> weights;
    for (int p = 0; p < k; ++p) weights.push_back(gen.small_rational(3, 2));
    const Splitting s(weights);
    if (!verify_splitting(f, s)) continue;
    CHECK(dual_bound(f, mu) <= s.total());
  }
}

TEST_CASE("scaling invariance") {
  InstanceGenerator gen(33);
  for (int trial = 0; trial < 30; ++trial) {
    const PayoffTable f = gen.concave_table(gen.uniform_int(2, 10));
    const Rational gamma = gen.small_rational(5, 7) + Rational(1, 9);
    CHECK(minimal_splitting(scale(f, gamma)).value == minimal_splitting(f).value);
  }
  CHECK(minimal_splitting(scale(coordination(4), 7)).value == 4);
}

TEST_CASE("monotonicity in the pointwise order") {
  InstanceGenerator gen(34);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int k = gen.uniform_int(2, 8);
    const PayoffTable g = gen.concave_table(k);
    // Raise g pointwise but keep its maximum.
    std::vector<Rational> raised(g.values().begin(), g.values().end());
    for (int i = 0; i < k; ++i) {
      raised[i] = std::min(g.f_star(), raised[i] + gen.small_rational(2, 3));
    }
    raised[k] = std::max(raised[k], Rational(0));
    const PayoffTable f = PayoffTable::from_values(raised);
    REQUIRE(f.f_star() == g.f_star());
    CHECK(minimal_splitting(f).value <= minimal_splitting(g).value);
    ++compared;
  }
  CHECK(compared == 60);
}

TEST_CASE("local_param_oracle never exceeds the program value") {
  InstanceGenerator gen(35);
  std::vector<PayoffTable> tables{basic(3), coordination(3), distance(4), cyclic(5), prototype(3, 4)};
  for (int i = 0; i < 15; ++i) tables.push_back(gen.concave_table(gen.uniform_int(2, 5)));
  for (const auto& f : tables) {
    const auto lp = minimal_splitting(f);
    Rational previous = 0;
    bool reached = false;
    const Integer budget = lcm_of_denominators(lp.worst_distribution);
    const int limit = std::min(8, budget.convert_to<int>());
    for (int n = 1; n <= limit; ++n) {
      const auto o = local_param_oracle(f, n);
      CHECK(o.value >= previous);
      CHECK(o.value <= lp.value);
      previous = o.value;
      reached = reached || o.value == lp.value;
    }
    if (budget <= 8) CHECK(reached);
  }
}

TEST_CASE("size-restricted oracle agrees with tuple enumeration") {
  for (const auto& f : {basic(3), cyclic(4), distance(3), coordination(3)}) {
    Rational best = 0;
    for (int n = 1; n <= 4; ++n) best = std::max(best, oracle::tuple_local_parameter(f, n));
    CHECK(local_param_oracle(f, 4).value == best);
  }
}

TEST_CASE("delta_grid_search examples") {
  const std::vector<Rational> two{1, 1};
  CHECK(contains(delta_grid_search(cyclic(6), two), unit_splitting(6, {1, 4})));

  const int i = between_index(5, 8);
  const std::vector<Rational> three{1, 1, 1};
  const auto found = delta_grid_search(prototype(5, 8), three);
  CHECK(contains(found, unit_splitting(8, {1, i, 6})));

  const std::vector<Rational> one{1};
  CHECK(delta_grid_search(basic(3), one).empty());
}

TEST_CASE("delta_grid_search output is verified, deduplicated and sorted") {
  const std::vector<Rational> delta{1, 1, Rational(1, 4), Rational(1, 4)};
  const PayoffTable f = prototype(5, 7);
  const auto found = delta_grid_search(f, delta);
  const auto parallel = delta_grid_search(f, delta, kDefaultBudget, 3);
  CHECK(found == parallel);
  for (std::size_t j = 0; j < found.size(); ++j) {
    CHECK(verify_splitting(f, found[j]));
    CHECK(found[j].total() == Rational(5, 2));
    if (j > 0) {
      CHECK(std::lexicographical_compare(found[j - 1].weights().begin(), found[j - 1].weights().end(),
                                         found[j].weights().begin(), found[j].weights().end()));
    }
  }
  CHECK_THROWS_AS(delta_grid_search(f, delta, 100), BudgetExceeded);
}

TEST_CASE("theorem_splitting recipes") {
  const Splitting left = theorem_splitting(prototype(3, 9), {SplittingFamily::left, 3});
  CHECK(left == unit_splitting(9, {5, 2}));
  CHECK(verify_splitting(prototype(3, 9), left));

  CHECK(between_index(9, 10) == 2);
  const Splitting general = theorem_splitting(prototype(9, 10), {SplittingFamily::general, 9});
  CHECK(general == unit_splitting(10, {1, 2, 10}));
  CHECK(general.total() == 3);

  const Splitting odd = theorem_splitting(cyclic(7), {SplittingFamily::left, 3});
  CHECK(odd == unit_splitting(7, {4, 1}));
  CHECK(verify_splitting(cyclic(7), odd));
  CHECK(verify_splitting(prototype(3, 7), odd));

  CHECK(theorem_splitting(cyclic(8), {SplittingFamily::cyclic}) == unit_splitting(8, {1, 5}));

  CHECK_THROWS_AS(theorem_splitting(prototype(5, 9), {SplittingFamily::left, 5}), ValidationError);
  CHECK_THROWS_AS(theorem_splitting(prototype(4, 9), {SplittingFamily::general, 4}), ValidationError);
  CHECK_THROWS_AS(theorem_splitting(cyclic(7), {SplittingFamily::affine}), ValidationError);
}

TEST_CASE("theorem splittings pass condition(*) across their regimes") {
  for (int k = 3; k <= 40; ++k) {
    for (int l = 1; l <= k - 2; ++l) {
      const PayoffTable f = prototype(l, k);
      if (l < (k + 1) / 2) CHECK(verify_splitting(f, theorem_splitting(f, {SplittingFamily::left, l})));
      if (l > k / 2) CHECK(verify_splitting(f, theorem_splitting(f, {SplittingFamily::general, l})));
    }
    if (k % 2 == 0) {
      const PayoffTable c = cyclic(k);
      CHECK(verify_splitting(c, theorem_splitting(c, {SplittingFamily::cyclic})));
    }
  }
  InstanceGenerator gen(36);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = gen.uniform_int(2, 12);
    const Rational a = gen.small_rational(3, 5) + Rational(1, 7);
    const Rational b = gen.small_rational(3, 5);
    const PayoffTable inc = affine(a, b, k);
    const Splitting s = theorem_splitting(inc, {SplittingFamily::affine});
    CHECK(verify_splitting(inc, s));
    CHECK(s.total() == rho_affine(a, b, k));

    const Rational b2 = a * (k - 1) + gen.small_rational(3, 5) + Rational(1, 11);
    const PayoffTable dec = decreasing_affine(a, b2, k);
    const Splitting sd = theorem_splitting(dec, {SplittingFamily::decreasing});
    CHECK(verify_splitting(dec, sd));
    CHECK(sd.total() == rho_decreasing(a, b2, k));
  }
}

TEST_CASE("between_index") {
  CHECK(between_index(3, 5) == 2);
  CHECK(between_index(9, 10) == 2);
  CHECK(between_index(2, 3) == 2);
  for (int k = 3; k <= 120; ++k) {
    for (int l = k / 2 + 1; l <= k - 1; ++l) {
      const int i = between_index(l, k);
      CHECK(i >= 2);
      CHECK(i <= l);
      CHECK(Rational((k - l) * (2 * l - k), l) <= i);
      CHECK(Rational(i) <= Rational(l * (k - l), 2 * l - k) + 1);
      if (i > 2) CHECK(Rational((k - l) * (2 * l - k), l) > i - 1);
    }
  }
  CHECK_THROWS_AS(between_index(2, 5), ValidationError);
}

TEST_CASE("rho formulas") {
  CHECK(rho_affine(1, 0, 4) == 2);
  CHECK(rho_affine(1, 1, 3) == Rational(3, 2));
  CHECK(rho_decreasing(1, 3, 4) == 2);
  CHECK(rho_decreasing(1, 4, 4) == Rational(8, 5));
}

TEST_CASE("transfer_bound") {
  CHECK(transfer_bound(cyclic(6), 3) == 2);
  CHECK(transfer_bound(cyclic(5), 2) <= 2);
  CHECK_THROWS_AS(transfer_bound(cyclic(6), 2), ValidationError);
  CHECK_THROWS_AS(transfer_bound(basic(4), 3), ValidationError);
  CHECK_THROWS_AS(transfer_bound(coordination(4), 0), ValidationError);

  InstanceGenerator gen(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = gen.uniform_int(3, 12);
    const PayoffTable f = gen.concave_table(k);
    if (!is_concave_nonnegative(f)) continue;
    for (int l : dis_star(f)) {
      if (l == 0 || l == k - 1) continue;
      CHECK(transfer_bound(f, l) >= minimal_splitting(f).value);
    }
  }
}

TEST_CASE("infeasible program is refused") {
  // Color 2 sees only distances 0 and 1, where the table vanishes.
  const PayoffTable f = PayoffTable::from_values({Rational(0), Rational(0), Rational(1), Rational(0)});
  CHECK_FALSE(covers_every_color(f));
  CHECK_THROWS_AS(minimal_splitting(f), ValidationError);
}
