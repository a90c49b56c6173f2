#include "doctest.h"

#include "colorgame/errors.hpp"
#include "colorgame/payoff.hpp"
#include "colorgame/random_instances.hpp"

using namespace colorgame;

namespace {

std::vector<Rational> values_of(const PayoffTable& f) { return {f.values().begin(), f.values().end()}; }

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("basic payoff") {
  CHECK(values_of(basic(2)) == ints({0, 1, 1}));
  for (int k = 2; k <= 8; ++k) {
    const PayoffTable f = basic(k);
    CHECK(f_star(f) == 1);
    std::vector<int> expected;
    for (int i = 1; i < k; ++i) expected.push_back(i);
    CHECK(dis_star(f) == expected);
    CHECK(f.is_concave());
  }
}

TEST_CASE("coordination payoff") {
  const PayoffTable f = coordination(3);
  CHECK(values_of(f) == ints({1, 0, 0, 0}));
  CHECK(f_star(f) == 1);
  CHECK(dis_star(f) == std::vector<int>{0});
  CHECK_FALSE(f.is_concave());
}

TEST_CASE("distance, cyclic and affine families") {
  CHECK(values_of(cyclic(4)) == ints({0, 1, 2, 1, 0}));
  CHECK(values_of(distance(3)) == ints({0, 1, 2, 3}));
  CHECK(distance(3) == affine(1, 0, 3));
  CHECK(values_of(decreasing_affine(1, 3, 4)) == ints({3, 2, 1, 0, -1}));
  CHECK(decreasing_affine(1, 3, 4).is_concave());
  for (const auto& f : {distance(5), cyclic(5), affine(Rational(2, 3), Rational(1, 4), 6), decreasing_affine(1, 5, 5)}) {
    CHECK(f.is_concave());
  }
  CHECK(affine(Rational(1, 2), 3, 2)(1) == Rational(7, 2));
}

TEST_CASE("family preconditions") {
  CHECK_THROWS_AS(decreasing_affine(1, 2, 4), ValidationError);
  CHECK_THROWS_AS(affine(0, 1, 4), ValidationError);
  CHECK_THROWS_AS(affine(1, -1, 4), ValidationError);
  CHECK_THROWS_AS(basic(1), ValidationError);
  CHECK_THROWS_AS(prototype(0, 5), ValidationError);
  CHECK_THROWS_AS(prototype(5, 5), ValidationError);
}

TEST_CASE("from_values validation") {
  CHECK_THROWS_AS(PayoffTable::from_values(ints({0, -1, 1})), ValidationError);
  CHECK_THROWS_AS(PayoffTable::from_values(ints({0, 0, 0})), ValidationError);
  CHECK_THROWS_AS(PayoffTable::from_values(ints({1, 2})), ValidationError);
  // f(k) may be negative only for concave tables.
  CHECK_NOTHROW(PayoffTable::from_values(ints({2, 1, -1})));
  CHECK_THROWS_AS(PayoffTable::from_values(ints({0, 2, 0, 1, -1})), ValidationError);
  CHECK_THROWS_AS(PayoffTable::from_values(ints({2, 1, 0, -1, -2})), ValidationError);
}

TEST_CASE("prototype tents") {
  const PayoffTable f = prototype(2, 6);
  CHECK(f(1) == Rational(1, 2));
  CHECK(f(4) == Rational(1, 2));
  CHECK(f(0) == 0);
  CHECK(f(6) == 0);
  for (int k = 3; k <= 12; ++k) {
    for (int l = 1; l <= k - 1; ++l) {
      const PayoffTable p = prototype(l, k);
      CHECK(p(l) == 1);
      CHECK(f_star(p) == 1);
      CHECK(dis_star(p) == std::vector<int>{l});
      CHECK(p.is_concave());
    }
  }
}

TEST_CASE("prototype at the middle is scaled cyclic") {
  for (int k = 2; k <= 20; k += 2) {
    const PayoffTable expected = scale(cyclic(k), Rational(2, k));
    CHECK(values_of(prototype(k / 2, k)) == values_of(expected));
  }
}

TEST_CASE("f_star and dis_star") {
  CHECK(f_star(cyclic(5)) == 2);
  CHECK(dis_star(cyclic(5)) == std::vector<int>{2, 3});
  CHECK(f_star(affine(2, 1, 4)) == 7);
  CHECK(dis_star(affine(2, 1, 4)) == std::vector<int>{3});
}

TEST_CASE("scale") {
  CHECK(values_of(scale(basic(3), 5)) == ints({0, 5, 5, 5}));
  CHECK(scale(cyclic(5), 1) == cyclic(5));
  CHECK(f_star(scale(cyclic(5), Rational(3, 7))) == Rational(6, 7));
  CHECK(scale(cyclic(5), 3).is_concave());
  CHECK_FALSE(scale(coordination(5), 3).is_concave());
  CHECK_THROWS_AS(scale(basic(3), 0), ValidationError);
}

TEST_CASE("shape predicates") {
  CHECK(is_affine(distance(5)));
  CHECK(is_affine(decreasing_affine(1, 4, 4)));
  CHECK_FALSE(is_affine(cyclic(5)));
  CHECK(is_non_decreasing(basic(4)));
  CHECK(is_non_increasing(coordination(4)));
  CHECK(is_constant_on_distances(scale(basic(2), 3)) == false);
  CHECK(positive_on_positive_distances(cyclic(5)));
  CHECK_FALSE(positive_on_positive_distances(decreasing_affine(1, 3, 4)));
  CHECK(proportional_to(prototype(3, 6), cyclic(6)));
  CHECK_FALSE(proportional_to(prototype(2, 6), cyclic(6)));
  CHECK(is_concave_nonnegative(cyclic(5)));
  CHECK_FALSE(is_concave_nonnegative(decreasing_affine(1, 3, 4)));
  CHECK(covers_every_color(coordination(3)));
  CHECK(covers_every_color(basic(3)));
}

TEST_CASE("concave tables are positive at positive distances") {
  InstanceGenerator gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    const PayoffTable f = gen.concave_table(gen.uniform_int(2, 12));
    REQUIRE(f.is_concave());
    for (int i = 1; i <= f.k() - 2; ++i) CHECK(f(i) > 0);
  }
}

TEST_CASE("tent lies below every normalized concave table peaking at the same distance") {
  InstanceGenerator gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = gen.uniform_int(3, 12);
    const PayoffTable f = gen.concave_table(k);
    if (!is_concave_nonnegative(f)) continue;
    for (int l : dis_star(f)) {
      if (l == 0 || l == k - 1) continue;
      const PayoffTable tent = prototype(l, k);
      for (int i = 0; i <= k - 1; ++i) CHECK(tent(i) <= f(i) / f.f_star());
    }
  }
}
