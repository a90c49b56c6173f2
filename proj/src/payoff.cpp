#include "colorgame/payoff.hpp"

#include "colorgame/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace colorgame {

namespace {

void require_k(int k) {
  if (k < 2) throw ValidationError("spectrum size k must be >= 2, got " + std::to_string(k));
}

}  // namespace

PayoffTable PayoffTable::from_values(std::vector<Rational> values, std::string name) {
  if (values.size() < 3) {
    throw ValidationError("payoff table needs values f(0..k) with k >= 2");
  }
  PayoffTable f;
  f.values_ = std::move(values);
  f.name_ = std::move(name);
  const int k = f.k();

  for (int i = 0; i < k; ++i) {
    if (f.values_[i] < 0) {
      throw ValidationError("payoff f(" + std::to_string(i) + ") = " +
                            to_string(f.values_[i]) + " is negative");
    }
  }
  f.f_star_ = *std::max_element(f.values_.begin(), f.values_.begin() + k);
  if (f.f_star_ <= 0) throw ValidationError("payoff maximum f* over 0..k-1 must be positive");

  f.concave_ = true;
  for (int i = 0; i + 2 <= k; ++i) {
    if (f.values_[i + 2] - f.values_[i + 1] > f.values_[i + 1] - f.values_[i]) {
      f.concave_ = false;
      break;
    }
  }
  if (f.values_[k] < 0 && !f.concave_) {
    throw ValidationError("payoff f(k) = " + to_string(f.values_[k]) +
                          " may only be negative for a concave table");
  }
  if (f.concave_) {
    // Concavity on 0..k-1 with f* > 0 forces strict positivity inside.
    for (int i = 1; i + 1 < k; ++i) {
      if (f.values_[i] <= 0) {
        throw TheoremViolation("concave table with f* > 0 vanishes at interior distance " +
                               std::to_string(i));
      }
    }
  }
  return f;
}

PayoffTable basic(int k) {
  require_k(k);
  std::vector<Rational> v(k + 1, Rational(1));
  v[0] = 0;
  return PayoffTable::from_values(std::move(v), "basic");
}

PayoffTable coordination(int k) {
  require_k(k);
  std::vector<Rational> v(k + 1, Rational(0));
  v[0] = 1;
  return PayoffTable::from_values(std::move(v), "coordination");
}

PayoffTable distance(int k) {
  require_k(k);
  std::vector<Rational> v;
  for (int i = 0; i <= k; ++i) v.emplace_back(i);
  return PayoffTable::from_values(std::move(v), "distance");
}

PayoffTable cyclic(int k) {
  require_k(k);
  std::vector<Rational> v;
  for (int i = 0; i <= k; ++i) v.emplace_back(std::min(i, k - i));
  return PayoffTable::from_values(std::move(v), "cyclic");
}

PayoffTable affine(const Rational& a, const Rational& b, int k) {
  require_k(k);
  if (a <= 0) throw ValidationError("affine payoff needs slope a > 0");
  if (b < 0) throw ValidationError("affine payoff needs intercept b >= 0");
  std::vector<Rational> v;
  for (int i = 0; i <= k; ++i) v.push_back(a * i + b);
  return PayoffTable::from_values(std::move(v), "affine");
}

PayoffTable decreasing_affine(const Rational& a, const Rational& b, int k) {
  require_k(k);
  if (a <= 0) throw ValidationError("decreasing payoff needs slope a > 0");
  if (b < 0) throw ValidationError("decreasing payoff needs intercept b >= 0");
  if (b - a * (k - 1) < 0) {
    throw ValidationError("decreasing payoff needs f(k-1) = b - a(k-1) >= 0, got " +
                          to_string(b - a * (k - 1)));
  }
  std::vector<Rational> v;
  for (int i = 0; i <= k; ++i) v.push_back(b - a * i);
  return PayoffTable::from_values(std::move(v), "decreasing");
}

PayoffTable prototype(int peak, int k) {
  require_k(k);
  if (peak < 1 || peak > k - 1) {
    throw ValidationError("prototype peak must lie in 1..k-1, got " + std::to_string(peak));
  }
  std::vector<Rational> v;
  for (int i = 0; i <= k; ++i) {
    v.push_back(i <= peak ? Rational(i, peak) : Rational(k - i, k - peak));
  }
  return PayoffTable::from_values(std::move(v), "proto:" + std::to_string(peak));
}

Rational f_star(const PayoffTable& f) { return f.f_star(); }

std::vector<int> dis_star(const PayoffTable& f) {
  std::vector<int> out;
  for (int i = 0; i < f.k(); ++i) {
    if (f(i) == f.f_star()) out.push_back(i);
  }
  return out;
}

PayoffTable scale(const PayoffTable& f, const Rational& gamma) {
  if (gamma <= 0) throw ValidationError("scaling factor must be positive");
  std::vector<Rational> v(f.values().begin(), f.values().end());
  for (auto& x : v) x *= gamma;
  return PayoffTable::from_values(std::move(v), f.name());
}

bool is_affine(const PayoffTable& f) {
  for (int i = 0; i + 2 <= f.k(); ++i) {
    if (f(i + 2) - f(i + 1) != f(i + 1) - f(i)) return false;
  }
  return true;
}

bool is_non_decreasing(const PayoffTable& f) {
  for (int i = 0; i + 1 < f.k(); ++i) {
    if (f(i + 1) < f(i)) return false;
  }
  return true;
}

bool is_non_increasing(const PayoffTable& f) {
  for (int i = 0; i + 1 < f.k(); ++i) {
    if (f(i + 1) > f(i)) return false;
  }
  return true;
}

bool is_constant_on_distances(const PayoffTable& f) {
  return is_non_decreasing(f) && is_non_increasing(f);
}

bool positive_on_positive_distances(const PayoffTable& f) {
  for (int i = 1; i < f.k(); ++i) {
    if (f(i) <= 0) return false;
  }
  return true;
}

bool proportional_to(const PayoffTable& f, const PayoffTable& g) {
  if (f.k() != g.k()) return false;
  const Rational gamma = f.f_star() / g.f_star();
  for (int i = 0; i <= f.k(); ++i) {
    if (f(i) != gamma * g(i)) return false;
  }
  return true;
}

bool is_concave_nonnegative(const PayoffTable& f) {
  return f.is_concave() && f(f.k()) >= 0;
}

bool covers_every_color(const PayoffTable& f) {
  const int k = f.k();
  for (int p = 1; p <= k; ++p) {
    bool covered = false;
    for (int s = 1; s <= k && !covered; ++s) covered = f(std::abs(s - p)) > 0;
    if (!covered) return false;
  }
  return true;
}

}  // namespace colorgame
