#include "colorgame/random_instances.hpp"

#include "colorgame/errors.hpp"

#include <algorithm>
#include <limits>

namespace colorgame {

int InstanceGenerator::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = rng_();
  } while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

Rational InstanceGenerator::small_rational(int max_numerator, int max_denominator) {
  const int den = uniform_int(1, max_denominator);
  return Rational(uniform_int(0, max_numerator * den), den);
}

Graph InstanceGenerator::graph(int n, int edge_percent) {
  if (n < 2) throw ValidationError("random graph needs n >= 2");
  std::vector<Edge> edges;
  std::vector<int> degree(n + 1, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex w = u + 1; w <= n; ++w) {
      if (uniform_int(1, 100) <= edge_percent) {
        edges.emplace_back(u, w);
        ++degree[u];
        ++degree[w];
      }
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] > 0) continue;
    Vertex partner = uniform_int(1, n - 1);
    if (partner >= v) ++partner;
    edges.emplace_back(v, partner);
    ++degree[v];
    ++degree[partner];
  }
  return validate_graph(edges, n);
}

Coloring InstanceGenerator::coloring(int n, int k) { return Coloring(colors(n, k)); }

std::vector<Color> InstanceGenerator::colors(int count, int k) {
  std::vector<Color> out;
  for (int i = 0; i < count; ++i) out.push_back(uniform_int(1, k));
  return out;
}

PayoffTable InstanceGenerator::concave_table(int k) {
  for (;;) {
    std::vector<Rational> steps;
    for (int i = 0; i < k; ++i) {
      const int den = uniform_int(1, 6);
      steps.emplace_back(uniform_int(-8 * den, 8 * den), den);
    }
    std::sort(steps.begin(), steps.end(), std::greater<>());
    std::vector<Rational> values{small_rational(4, 3)};
    for (const auto& d : steps) values.push_back(values.back() + d);
    const Rational low = *std::min_element(values.begin(), values.end());
    if (low < 0) {
      for (auto& v : values) v -= low;
    }
    const Rational high = *std::max_element(values.begin(), values.end() - 1);
    if (high > 0) return PayoffTable::from_values(std::move(values), "random-concave");
  }
}

}  // namespace colorgame
