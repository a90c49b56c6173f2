#include "colorgame/game.hpp"

#include "colorgame/errors.hpp"

#include <cstdlib>
#include <string>

namespace colorgame {

void validate_coloring(const Graph& g, int k, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw ValidationError("coloring has " + std::to_string(c.size()) + " entries, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 1; v <= c.size(); ++v) {
    if (c(v) < 1 || c(v) > k) {
      throw ValidationError("vertex " + std::to_string(v) + " has color " +
                            std::to_string(c(v)) + " outside 1.." + std::to_string(k));
    }
  }
}

Coloring change(const Coloring& c, Vertex v, Color t) {
  Coloring out = c;
  out.colors_[v - 1] = t;
  return out;
}

Rational payoff_with_color(const Graph& g, const PayoffTable& f, const Coloring& c,
                           Vertex v, Color t) {
  Rational sum = 0;
  for (Vertex w : g.neighbors(v)) sum += f(std::abs(t - c(w)));
  return sum;
}

Rational player_payoff(const Graph& g, const PayoffTable& f, const Coloring& c, Vertex v) {
  return payoff_with_color(g, f, c, v, c(v));
}

Rational welfare(const Graph& g, const PayoffTable& f, const Coloring& c) {
  Rational sum = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) sum += player_payoff(g, f, c, v);
  return sum;
}

Rational welfare_edgewise(const Graph& g, const PayoffTable& f, const Coloring& c) {
  Rational sum = 0;
  for (const auto& [u, w] : g.edges()) sum += f(std::abs(c(u) - c(w)));
  return 2 * sum;
}

BestResponse best_response(const Graph& g, const PayoffTable& f, const Coloring& c, Vertex v) {
  BestResponse best{c(v), player_payoff(g, f, c, v)};
  for (Color t = 1; t <= f.k(); ++t) {
    if (t == c(v)) continue;
    Rational p = payoff_with_color(g, f, c, v, t);
    if (p > best.payoff) best = {t, std::move(p)};
  }
  return best;
}

StabilityResult is_stable(const Graph& g, const PayoffTable& f, const Coloring& c) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    BestResponse br = best_response(g, f, c, v);
    if (br.color != c(v)) {
      return {false, Deviation{v, br.color, player_payoff(g, f, c, v), std::move(br.payoff)}};
    }
  }
  return {};
}

Coloring reflect(const Coloring& c, int k) {
  std::vector<Color> out;
  for (Color t : c.colors()) out.push_back(k + 1 - t);
  return Coloring(std::move(out));
}

}  // namespace colorgame
