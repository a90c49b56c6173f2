#include "colorgame/local_parameter.hpp"

#include "colorgame/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace colorgame {

Splitting::Splitting(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w < 0) throw ValidationError("splitting weight " + to_string(w) + " is negative");
  }
}

Rational Splitting::total() const {
  Rational sum = 0;
  for (const auto& w : weights_) sum += w;
  return sum;
}

Distribution::Distribution(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Rational sum = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw ValidationError("distribution weight " + to_string(w) + " is negative");
    sum += w;
  }
  if (sum != 1) throw ValidationError("distribution weights sum to " + to_string(sum));
}

std::vector<Rational> response_profile(const PayoffTable& f, std::span<const Rational> weights) {
  const int k = f.k();
  if (static_cast<int>(weights.size()) != k) {
    throw ValidationError("expected " + std::to_string(k) + " weights, got " +
                          std::to_string(weights.size()));
  }
  std::vector<Rational> out(k);
  for (int t = 1; t <= k; ++t) {
    for (int p = 1; p <= k; ++p) {
      if (weights[p - 1] != 0) out[t - 1] += weights[p - 1] * f(std::abs(p - t));
    }
  }
  return out;
}

SplittingCheck verify_splitting(const PayoffTable& f, const Splitting& s) {
  // f(|s-p|) is symmetric in s and p, so coverage of p is the response profile.
  const auto coverage = response_profile(f, s.weights());
  for (int p = 1; p <= f.k(); ++p) {
    if (coverage[p - 1] < f.f_star()) return {false, p, coverage[p - 1]};
  }
  return {};
}

Rational dual_bound(const PayoffTable& f, const Distribution& mu) {
  const auto profile = response_profile(f, mu.weights());
  const Rational best = *std::max_element(profile.begin(), profile.end());
  if (best == 0) throw ValidationError("no color earns positive payoff against distribution");
  return f.f_star() / best;
}

namespace {

// Fraction-free tableau for
//   maximize sum_p y_p   subject to   A y <= 1,  y >= 0
// with a square non-negative integer matrix A. All rows share the implicit
// denominator `det_` (the previous pivot element), so every entry stays an
// integer and each update is an exact division.
//
// Columns 0..k-1 are the structural variables, k..2k-1 the slacks, 2k the
// right-hand side. Row k holds the reduced costs.
class FractionFreeTableau {
 public:
  explicit FractionFreeTableau(const std::vector<std::vector<Integer>>& a)
      : k_(static_cast<int>(a.size())),
        rows_(k_ + 1, std::vector<Integer>(2 * k_ + 1)),
        basis_(k_) {
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) rows_[i][j] = a[i][j];
      rows_[i][k_ + i] = 1;
      rows_[i][2 * k_] = 1;
      basis_[i] = k_ + i;
    }
    for (int j = 0; j < k_; ++j) rows_[k_][j] = -1;
  }

  // Bland's rule: the lowest-index improving column enters, and ratio ties
  // leave by lowest basic variable index. Returns false if unbounded.
  bool solve() {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < 2 * k_; ++j) {
        if (rows_[k_][j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      for (int i = 0; i < k_; ++i) {
        const Integer& col = rows_[i][entering];
        if (col <= 0) continue;
        if (leaving < 0) {
          leaving = i;
          continue;
        }
        // rhs_i / col_i versus rhs_l / col_l, both denominators positive.
        const Integer lhs = rows_[i][2 * k_] * rows_[leaving][entering];
        const Integer rhs = rows_[leaving][2 * k_] * col;
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leaving])) leaving = i;
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  int pivots() const { return pivots_; }

  // Optimal structural values y_0..y_{k-1}.
  std::vector<Rational> primal() const {
    std::vector<Rational> y(k_);
    for (int i = 0; i < k_; ++i) {
      if (basis_[i] < k_) y[basis_[i]] = Rational(rows_[i][2 * k_], det_);
    }
    return y;
  }

  // Optimal multipliers of the k constraints, read off the slack columns.
  std::vector<Rational> dual() const {
    std::vector<Rational> x(k_);
    for (int t = 0; t < k_; ++t) x[t] = Rational(rows_[k_][k_ + t], det_);
    return x;
  }

  Rational objective() const { return Rational(rows_[k_][2 * k_], det_); }

 private:
  void pivot(int r, int s) {
    const Integer piv = rows_[r][s];
    Integer scratch;
    for (int i = 0; i <= k_; ++i) {
      if (i == r) continue;
      auto& row = rows_[i];
      const Integer factor = row[s];
      for (int j = 0; j <= 2 * k_; ++j) {
        scratch = row[j] * piv;
        if (factor != 0 && rows_[r][j] != 0) scratch -= factor * rows_[r][j];
        row[j] = scratch / det_;
      }
    }
    det_ = piv;
    basis_[r] = s;
    ++pivots_;
  }

  int k_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<int> basis_;
  Integer det_ = 1;
  int pivots_ = 0;
};

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm(l, denominator(v));
  return l;
}

}  // namespace

LocalParamResult minimal_splitting(const PayoffTable& f) {
  if (!covers_every_color(f)) {
    throw ValidationError("some color cannot be covered by any splitting: f vanishes on all "
                          "distances reachable from it");
  }
  const int k = f.k();
  // Scale f(0..k-1) to integers. In these units f* becomes `unit`, and the
  // program below is the splitting program for f / unit.
  const Integer multiplier = lcm_of_denominators(f.values().first(k));
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
  for (int t = 0; t < k; ++t) {
    for (int p = 0; p < k; ++p) {
      a[t][p] = numerator(Rational(f(std::abs(p - t)) * multiplier));
    }
  }
  const Rational unit = f.f_star() * multiplier;

  FractionFreeTableau tableau(a);
  if (!tableau.solve()) {
    throw TheoremViolation("splitting program unbounded although every color is covered");
  }

  std::vector<Rational> weights = tableau.dual();
  for (auto& w : weights) w *= unit;
  std::vector<Rational> y = tableau.primal();
  Rational mass = 0;
  for (const auto& v : y) mass += v;
  for (auto& v : y) v /= mass;

  LocalParamResult result;
  result.value = tableau.objective() * unit;
  result.optimal_splitting = Splitting(std::move(weights));
  result.worst_distribution = Distribution(std::move(y));
  result.dual_value = dual_bound(f, result.worst_distribution);
  result.pivots = tableau.pivots();

  // Re-check both certificates independently of the tableau.
  if (result.optimal_splitting.total() != result.value ||
      !verify_splitting(f, result.optimal_splitting) || result.dual_value != result.value) {
    throw TheoremViolation("splitting program certificate failed re-check");
  }
  return result;
}

std::vector<Splitting> delta_grid_search(const PayoffTable& f, std::span<const Rational> delta,
                                         std::uint64_t budget, int jobs) {
  const int k = f.k();
  const int r = static_cast<int>(delta.size());
  if (r == 0) throw ValidationError("delta list is empty");
  for (const auto& d : delta) {
    if (d <= 0) throw ValidationError("delta entry " + to_string(d) + " is not positive");
  }
  const std::uint64_t points = saturating_power(k, r);
  if (points > budget) {
    throw BudgetExceeded("delta grid of k^r = " + std::to_string(k) + "^" + std::to_string(r) +
                             " points exceeds budget " + std::to_string(budget),
                         points, budget);
  }

  // Workers own disjoint values of v_1; the merged set is order independent.
  std::set<std::vector<Rational>> found;
  std::mutex found_mutex;
  auto scan_prefix = [&](int first) {
    std::set<std::vector<Rational>> candidates;
    std::vector<int> v(r, 1);
    v[0] = first;
    for (;;) {
      std::vector<Rational> w(k);
      for (int i = 0; i < r; ++i) w[v[i] - 1] += delta[i];
      candidates.insert(std::move(w));
      int pos = r - 1;
      while (pos >= 1 && v[pos] == k) v[pos--] = 1;
      if (pos < 1) break;
      ++v[pos];
    }
    std::set<std::vector<Rational>> passing;
    for (auto& w : candidates) {
      if (verify_splitting(f, Splitting(w))) passing.insert(w);
    }
    std::lock_guard lock(found_mutex);
    found.merge(passing);
  };

  jobs = std::clamp(jobs, 1, k);
  if (jobs == 1) {
    for (int first = 1; first <= k; ++first) scan_prefix(first);
  } else {
    std::vector<std::thread> workers;
    for (int id = 0; id < jobs; ++id) {
      workers.emplace_back([&, id] {
        for (int first = 1 + id; first <= k; first += jobs) scan_prefix(first);
      });
    }
    for (auto& t : workers) t.join();
  }

  std::vector<Splitting> out;
  for (const auto& w : found) out.emplace_back(w);
  return out;
}

Rational rho_affine(const Rational& a, const Rational& b, int k) {
  return 2 * (a * (k - 1) + b) / (a * (k - 1) + 2 * b);
}

Rational rho_decreasing(const Rational& a, const Rational& b, int k) {
  const Rational denom = 2 * b - a * (k - 1);
  if (denom <= 0) throw ValidationError("rho' undefined: 2b - a(k-1) must be positive");
  return 2 * b / denom;
}

int between_index(int peak, int k) {
  if (k < 3 || peak <= k / 2 || peak > k - 1) {
    throw ValidationError("between_index needs floor(k/2) < l <= k-1, got l=" +
                          std::to_string(peak) + ", k=" + std::to_string(k));
  }
  const Rational lower(Integer(k - peak) * (2 * peak - k), peak);
  const Rational upper = Rational(Integer(peak) * (k - peak), 2 * peak - k) + 1;
  for (int i = 2; i <= peak; ++i) {
    if (lower <= i && i <= upper) return i;
  }
  throw TheoremViolation("no integer between the bounds for l=" + std::to_string(peak) +
                         ", k=" + std::to_string(k));
}

namespace {

void require_peak_regime(const PayoffTable& f, int peak) {
  if (!is_concave_nonnegative(f)) {
    throw ValidationError("tent-based splittings need f concave and non-negative on 0..k");
  }
  const auto star = dis_star(f);
  if (std::find(star.begin(), star.end(), peak) == star.end()) {
    throw ValidationError("distance " + std::to_string(peak) + " is not a maximizer of f");
  }
}

}  // namespace

Splitting theorem_splitting(const PayoffTable& f, SplittingRecipe recipe) {
  const int k = f.k();
  std::vector<Rational> w(k);
  switch (recipe.family) {
    case SplittingFamily::affine: {
      const Rational a = f(1) - f(0);
      if (!is_affine(f) || a <= 0) throw ValidationError("f is not increasing affine");
      w[0] = w[k - 1] = rho_affine(a, f(0), k) / 2;
      break;
    }
    case SplittingFamily::decreasing: {
      const Rational a = f(0) - f(1);
      if (!is_affine(f) || a <= 0) throw ValidationError("f is not decreasing affine");
      w[0] = w[k - 1] = rho_decreasing(a, f(0), k) / 2;
      break;
    }
    case SplittingFamily::cyclic:
      if (!proportional_to(f, cyclic(k))) throw ValidationError("f is not a cyclic payoff");
      w[0] = w[k / 2] = 1;
      break;
    case SplittingFamily::left: {
      const int peak = recipe.peak;
      const int half_up = (k + 1) / 2;
      if (peak < 1 || peak >= half_up || peak > k - 2) {
        throw ValidationError("left splitting needs 1 <= l < ceil(k/2), l <= k-2");
      }
      require_peak_regime(f, peak);
      w[half_up - 1] = 1;
      w[half_up - peak - 1] = 1;
      break;
    }
    case SplittingFamily::general: {
      const int peak = recipe.peak;
      if (peak <= k / 2 || peak > k - 1) {
        throw ValidationError("general splitting needs floor(k/2) < l <= k-1");
      }
      require_peak_regime(f, peak);
      w[0] = 1;
      w[between_index(peak, k) - 1] = 1;
      w[peak] = 1;
      break;
    }
  }
  return Splitting(std::move(w));
}

Rational transfer_bound(const PayoffTable& f, int peak) {
  const int k = f.k();
  if (peak < 1 || peak > k - 2) {
    throw ValidationError("transfer needs a maximizer l outside {0, k-1}, got " +
                          std::to_string(peak));
  }
  require_peak_regime(f, peak);
  return minimal_splitting(prototype(peak, k)).value;
}

}  // namespace colorgame
