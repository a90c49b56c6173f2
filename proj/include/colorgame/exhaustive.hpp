#pragma once

#include "colorgame/game.hpp"
#include "colorgame/graph.hpp"
#include "colorgame/payoff.hpp"
#include "colorgame/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace colorgame {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;  // upper limit on k^n
  int jobs = 1;
};

struct PoaReport {
  Rational opt_welfare;
  Rational worst_stable_welfare;
  Rational poa;
  Coloring witness_opt;    // lexicographically smallest optimum in the scanned half
  Coloring witness_worst;  // lexicographically smallest worst stable coloring scanned
  std::uint64_t colorings_scanned = 0;
};

// Exact price of anarchy by enumeration. Only colorings with
// c(1) <= ceil(k/2) are scanned: reflecting every color (t -> k+1-t) keeps all
// distances, so the other half repeats the same welfare and stability values.
// Throws BudgetExceeded if k^n > options.budget. Throws ValidationError if
// the worst stable coloring has zero welfare (unbounded ratio).
PoaReport brute_force_poa(const Graph& g, const PayoffTable& f, const ScanOptions& options = {});

// Calls `visit` on every stable coloring exactly once, in counter order
// (vertex 1 most significant, colors ascending).
void for_each_stable(const Graph& g, const PayoffTable& f,
                     const std::function<void(const Coloring&)>& visit,
                     const ScanOptions& options = {});
std::vector<Coloring> enumerate_stable(const Graph& g, const PayoffTable& f,
                                       const ScanOptions& options = {});

// Neighbor color counts nu_p for p in 1..k.
struct ColorMultiset {
  std::vector<int> counts;

  int total() const;
  int count(Color p) const { return counts[p - 1]; }
  friend bool operator==(const ColorMultiset&, const ColorMultiset&) = default;
};

struct LocalOracleResult {
  Rational value;
  ColorMultiset witness;
};

// max over multisets of size 1..max_total of
//   size * f* / max_t sum_p nu_p f(|p - t|),
// a lower estimate of the local parameter converging to it as max_total
// grows. Ties keep the first multiset in enumeration order.
LocalOracleResult local_param_oracle(const PayoffTable& f, int max_total);

}  // namespace colorgame
