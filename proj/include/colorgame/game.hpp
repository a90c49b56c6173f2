#pragma once

#include "colorgame/graph.hpp"
#include "colorgame/payoff.hpp"
#include "colorgame/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace colorgame {

// A strategy profile: one color in 1..k per vertex, indexed by 1-based vertex.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int size() const { return static_cast<int>(colors_.size()); }
  Color operator()(Vertex v) const { return colors_[v - 1]; }
  std::span<const Color> colors() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  friend Coloring change(const Coloring& c, Vertex v, Color t);
  std::vector<Color> colors_;
};

// Throws ValidationError unless c has one entry per vertex of g, all in 1..k.
void validate_coloring(const Graph& g, int k, const Coloring& c);

// The coloring where v switched to t; identical to c when c(v) == t.
Coloring change(const Coloring& c, Vertex v, Color t);

// Sum over neighbors w of f(|c(v) - c(w)|).
Rational player_payoff(const Graph& g, const PayoffTable& f, const Coloring& c, Vertex v);

// Payoff v would receive with color t, everything else fixed.
Rational payoff_with_color(const Graph& g, const PayoffTable& f, const Coloring& c,
                           Vertex v, Color t);

// Sum of all player payoffs.
Rational welfare(const Graph& g, const PayoffTable& f, const Coloring& c);
// Twice the sum of edge contributions. Always equal to welfare().
Rational welfare_edgewise(const Graph& g, const PayoffTable& f, const Coloring& c);

struct BestResponse {
  Color color;
  Rational payoff;
};

// Maximizes v's payoff over colors. Ties prefer the current color, then the
// smallest color.
BestResponse best_response(const Graph& g, const PayoffTable& f, const Coloring& c, Vertex v);

struct Deviation {
  Vertex vertex;
  Color to;
  Rational old_payoff;
  Rational new_payoff;
};

struct StabilityResult {
  bool stable = true;
  std::optional<Deviation> witness;  // set iff !stable

  explicit operator bool() const { return stable; }
};

// Checks vertices in order 1..n; the witness is the first vertex with a
// profitable deviation, moving to its best response.
StabilityResult is_stable(const Graph& g, const PayoffTable& f, const Coloring& c);

// Maps every color t to k + 1 - t.
Coloring reflect(const Coloring& c, int k);

}  // namespace colorgame
