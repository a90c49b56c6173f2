#include "colorgame/exhaustive.hpp"

#include "colorgame/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace colorgame {

namespace {

// f(0..k-1) multiplied by the lcm of its denominators.
struct IntegerTable {
  std::vector<std::int64_t> values;
  Integer multiplier;
};

IntegerTable integer_table(const PayoffTable& f, std::int64_t weight_bound) {
  IntegerTable table;
  table.multiplier = 1;
  for (int d = 0; d < f.k(); ++d) table.multiplier = lcm(table.multiplier, denominator(f(d)));
  const Integer limit = Integer(std::numeric_limits<std::int64_t>::max() / 4) /
                        std::max<std::int64_t>(weight_bound, 1);
  for (int d = 0; d < f.k(); ++d) {
    const Integer scaled = numerator(Rational(f(d) * table.multiplier));
    if (scaled > limit) {
      throw ValidationError("payoff table too large for exhaustive 64-bit scan");
    }
    table.values.push_back(scaled.convert_to<std::int64_t>());
  }
  return table;
}

void require_budget(int k, int n, std::uint64_t budget) {
  const std::uint64_t count = saturating_power(k, n);
  if (count > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(k) + "^" + std::to_string(n) +
                             " colorings exceeds budget " + std::to_string(budget),
                         count, budget);
  }
}

// Walks colorings as a base-k counter over vertices (vertex 1 most
// significant, 0-based colors internally). For every vertex and color it keeps
// the payoff that color would earn, updated in O(deg * k) per color change.
class ColoringScanner {
 public:
  ColoringScanner(const Graph& g, const IntegerTable& table)
      : n_(g.vertex_count()),
        k_(static_cast<int>(table.values.size())),
        f_(table.values),
        adjacency_(n_),
        colors_(n_, 0),
        scores_(static_cast<std::size_t>(n_) * k_, 0) {
    for (Vertex v = 1; v <= n_; ++v) {
      for (Vertex w : g.neighbors(v)) adjacency_[v - 1].push_back(w - 1);
    }
  }

  // Fixes the leading vertices to `prefix`, all others to color 0.
  void reset(std::span<const int> prefix) {
    std::fill(colors_.begin(), colors_.end(), 0);
    std::copy(prefix.begin(), prefix.end(), colors_.begin());
    std::fill(scores_.begin(), scores_.end(), 0);
    welfare_ = 0;
    for (int v = 0; v < n_; ++v) {
      for (int w : adjacency_[v]) {
        for (int t = 0; t < k_; ++t) scores_[v * k_ + t] += f_[std::abs(t - colors_[w])];
      }
      welfare_ += scores_[v * k_ + colors_[v]];
    }
  }

  // Next coloring with vertices [0, fixed) untouched; false after wrapping.
  bool advance(int fixed) {
    for (int pos = n_ - 1; pos >= fixed; --pos) {
      if (colors_[pos] + 1 < k_) {
        set_color(pos, colors_[pos] + 1);
        return true;
      }
      set_color(pos, 0);
    }
    return false;
  }

  bool stable() const {
    for (int v = 0; v < n_; ++v) {
      const std::int64_t* row = &scores_[v * k_];
      const std::int64_t current = row[colors_[v]];
      for (int t = 0; t < k_; ++t) {
        if (row[t] > current) return false;
      }
    }
    return true;
  }

  std::int64_t welfare() const { return welfare_; }
  const std::vector<int>& colors() const { return colors_; }

  Coloring coloring() const {
    std::vector<Color> out;
    for (int c : colors_) out.push_back(c + 1);
    return Coloring(std::move(out));
  }

 private:
  void set_color(int u, int to) {
    const int from = colors_[u];
    for (int w : adjacency_[u]) {
      std::int64_t* row = &scores_[w * k_];
      for (int t = 0; t < k_; ++t) row[t] += f_[std::abs(t - to)] - f_[std::abs(t - from)];
      welfare_ += 2 * (f_[std::abs(to - colors_[w])] - f_[std::abs(from - colors_[w])]);
    }
    colors_[u] = to;
  }

  int n_;
  int k_;
  const std::vector<std::int64_t>& f_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> colors_;
  std::vector<std::int64_t> scores_;
  std::int64_t welfare_ = 0;
};

struct PartialPoa {
  bool any = false;
  std::int64_t opt = 0;
  std::vector<int> opt_colors;
  bool any_stable = false;
  std::int64_t worst = 0;
  std::vector<int> worst_colors;
  std::uint64_t scanned = 0;

  void offer_opt(std::int64_t w, const std::vector<int>& colors) {
    if (!any || w > opt || (w == opt && colors < opt_colors)) {
      any = true;
      opt = w;
      opt_colors = colors;
    }
  }

  void offer_worst(std::int64_t w, const std::vector<int>& colors) {
    if (!any_stable || w < worst || (w == worst && colors < worst_colors)) {
      any_stable = true;
      worst = w;
      worst_colors = colors;
    }
  }

  void merge(const PartialPoa& other) {
    if (other.any) offer_opt(other.opt, other.opt_colors);
    if (other.any_stable) offer_worst(other.worst, other.worst_colors);
    scanned += other.scanned;
  }
};

Coloring to_coloring(const std::vector<int>& zero_based) {
  std::vector<Color> out;
  for (int c : zero_based) out.push_back(c + 1);
  return Coloring(std::move(out));
}

}  // namespace

PoaReport brute_force_poa(const Graph& g, const PayoffTable& f, const ScanOptions& options) {
  const int n = g.vertex_count();
  const int k = f.k();
  require_budget(k, n, options.budget);
  const IntegerTable table = integer_table(f, 2 * static_cast<std::int64_t>(g.edge_count()));

  // Partitions fix the colors of the first one or two vertices; vertex 1 only
  // ranges over the lower half of the spectrum.
  const int half = (k + 1) / 2;
  const int prefix_length = (options.jobs > 1 && n > 1) ? 2 : 1;
  std::vector<std::vector<int>> prefixes;
  for (int first = 0; first < half; ++first) {
    if (prefix_length == 1) {
      prefixes.push_back({first});
    } else {
      for (int second = 0; second < k; ++second) prefixes.push_back({first, second});
    }
  }

  auto scan = [&](std::size_t begin, std::size_t stride) {
    PartialPoa part;
    ColoringScanner scanner(g, table);
    for (std::size_t i = begin; i < prefixes.size(); i += stride) {
      scanner.reset(prefixes[i]);
      do {
        ++part.scanned;
        part.offer_opt(scanner.welfare(), scanner.colors());
        if (scanner.stable()) part.offer_worst(scanner.welfare(), scanner.colors());
      } while (scanner.advance(prefix_length));
    }
    return part;
  };

  PartialPoa total;
  const int jobs = std::clamp<int>(options.jobs, 1, static_cast<int>(prefixes.size()));
  if (jobs == 1) {
    total = scan(0, 1);
  } else {
    std::vector<PartialPoa> parts(jobs);
    std::vector<std::thread> workers;
    for (int id = 0; id < jobs; ++id) {
      workers.emplace_back([&, id] { parts[id] = scan(id, jobs); });
    }
    for (auto& t : workers) t.join();
    for (const auto& p : parts) total.merge(p);
  }

  if (!total.any_stable) throw TheoremViolation("no stable coloring found");
  if (total.worst == 0) {
    throw ValidationError("a stable coloring has zero welfare; the price of anarchy is unbounded");
  }
  PoaReport report;
  report.opt_welfare = Rational(Integer(total.opt), table.multiplier);
  report.worst_stable_welfare = Rational(Integer(total.worst), table.multiplier);
  report.poa = Rational(Integer(total.opt), Integer(total.worst));
  report.witness_opt = to_coloring(total.opt_colors);
  report.witness_worst = to_coloring(total.worst_colors);
  report.colorings_scanned = total.scanned;
  return report;
}

void for_each_stable(const Graph& g, const PayoffTable& f,
                     const std::function<void(const Coloring&)>& visit,
                     const ScanOptions& options) {
  require_budget(f.k(), g.vertex_count(), options.budget);
  const IntegerTable table = integer_table(f, 2 * static_cast<std::int64_t>(g.edge_count()));
  ColoringScanner scanner(g, table);
  scanner.reset({});
  do {
    if (scanner.stable()) visit(scanner.coloring());
  } while (scanner.advance(0));
}

std::vector<Coloring> enumerate_stable(const Graph& g, const PayoffTable& f,
                                       const ScanOptions& options) {
  std::vector<Coloring> out;
  for_each_stable(g, f, [&](const Coloring& c) { out.push_back(c); }, options);
  return out;
}

int ColorMultiset::total() const {
  int sum = 0;
  for (int c : counts) sum += c;
  return sum;
}

LocalOracleResult local_param_oracle(const PayoffTable& f, int max_total) {
  if (max_total < 1) throw ValidationError("max_total must be >= 1");
  const int k = f.k();
  const IntegerTable table = integer_table(f, max_total);
  const std::int64_t star = *std::max_element(table.values.begin(), table.values.end());

  // profile[t] = sum_p nu_p f(|p - t|) over the colors assigned so far.
  std::vector<std::int64_t> profile(k, 0);
  std::vector<int> counts(k, 0);
  bool found = false;
  std::int64_t best_total = 0;
  std::int64_t best_response = 1;
  std::vector<int> best_counts;

  auto leaf = [&](int total) {
    if (total == 0) return;
    const std::int64_t response = *std::max_element(profile.begin(), profile.end());
    if (response == 0) {
      throw ValidationError("a neighbor multiset leaves every color with zero payoff; the "
                            "local parameter is infinite");
    }
    // total / response > best_total / best_response, exact in 128 bits.
    const __int128 lhs = static_cast<__int128>(total) * best_response;
    const __int128 rhs = static_cast<__int128>(best_total) * response;
    if (!found || lhs > rhs) {
      found = true;
      best_total = total;
      best_response = response;
      best_counts = counts;
    }
  };

  auto recurse = [&](auto&& self, int color, int used) -> void {
    if (color == k) {
      leaf(used);
      return;
    }
    for (int c = 0; used + c <= max_total; ++c) {
      counts[color] = c;
      self(self, color + 1, used + c);
      for (int t = 0; t < k; ++t) profile[t] += table.values[std::abs(color - t)];
    }
    const int added = max_total - used + 1;
    for (int t = 0; t < k; ++t) profile[t] -= added * table.values[std::abs(color - t)];
    counts[color] = 0;
  };
  recurse(recurse, 0, 0);

  return {Rational(Integer(best_total) * star, Integer(best_response)),
          ColorMultiset{best_counts}};
}

}  // namespace colorgame
