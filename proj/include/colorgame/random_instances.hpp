#pragma once

#include "colorgame/game.hpp"
#include "colorgame/graph.hpp"
#include "colorgame/payoff.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace colorgame {

// Seeded generators for property checks. Draws go through uniform_int(), so
// sequences are identical across standard library implementations.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  Rational small_rational(int max_numerator, int max_denominator);  // in [0, max_num]

  // Random simple graph on n vertices without isolated vertices: each pair is
  // an edge with probability ~ edge_percent/100, then isolated vertices get a
  // random partner.
  Graph graph(int n, int edge_percent = 40);
  Coloring coloring(int n, int k);
  std::vector<Color> colors(int count, int k);

  // Concave table on 0..k, non-negative everywhere, with f* > 0: sorted random
  // differences shifted so the minimum over 0..k is zero or positive.
  PayoffTable concave_table(int k);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace colorgame
