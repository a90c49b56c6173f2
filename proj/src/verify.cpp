#include "colorgame/verify.hpp"

#include "colorgame/bounds.hpp"
#include "colorgame/dynamics.hpp"
#include "colorgame/errors.hpp"
#include "colorgame/exhaustive.hpp"
#include "colorgame/local_parameter.hpp"
#include "colorgame/random_instances.hpp"

#include <chrono>
#include <string>

namespace colorgame {

namespace {

constexpr std::size_t kMaxDetails = 12;

// Collects failures for one check; the first kMaxDetails are kept verbatim.
class Tally {
 public:
  explicit Tally(CheckResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (r_.details.size() < kMaxDetails) r_.details.push_back(what);
  }
  int cases() const { return cases_; }
  int failures() const { return failures_; }

 private:
  CheckResult& r_;
  int cases_ = 0;
  int failures_ = 0;
};

std::string ks(int k) { return "k=" + std::to_string(k); }

std::string summary(const Tally& t) {
  return std::to_string(t.cases() - t.failures()) + "/" + std::to_string(t.cases()) + " cases hold";
}

// 200 random concave tables with k <= 25, shared by checks 5 and 6.
std::vector<PayoffTable> random_concave_tables() {
  InstanceGenerator gen(20'250'005);
  std::vector<PayoffTable> out;
  for (int i = 0; i < 200; ++i) out.push_back(gen.concave_table(gen.uniform_int(2, 25)));
  return out;
}

void check_basic(CheckResult& r, int) {
  Tally t(r);
  for (int k = 2; k <= 10; ++k) {
    const Rational v = minimal_splitting(basic(k)).value;
    t.expect(v == Rational(k, k - 1), ks(k) + ": value " + to_string(v));
  }
  r.computed = summary(t);
  r.pass = t.failures() == 0;
}

void check_coordination(CheckResult& r, int) {
  Tally t(r);
  for (int k = 2; k <= 10; ++k) {
    const Rational v = minimal_splitting(coordination(k)).value;
    t.expect(v == k, ks(k) + ": value " + to_string(v));
  }
  r.computed = summary(t);
  r.pass = t.failures() == 0;
}

void check_cyclic(CheckResult& r, int) {
  Tally t(r);
  Rational lowest_odd_gap = 1;
  for (int k = 2; k <= 40; k += 2) {
    const Rational v = minimal_splitting(cyclic(k)).value;
    t.expect(v == 2, ks(k) + ": value " + to_string(v));
  }
  for (int k = 3; k <= 39; k += 2) {
    const Rational v = minimal_splitting(cyclic(k)).value;
    const Rational lower = Rational(3, 2) * (1 - Rational(1, k));
    t.expect(lower <= v && v <= 2, ks(k) + ": value " + to_string(v) + " outside [" + to_string(lower) + ", 2]");
    if (2 - v < lowest_odd_gap) lowest_odd_gap = 2 - v;
  }
  r.computed = summary(t) + "; odd k closest to 2 misses it by " + to_string(lowest_odd_gap);
  r.pass = t.failures() == 0;
}

void check_affine(CheckResult& r, int) {
  Tally t(r);
  InstanceGenerator gen(20'250'004);
  for (int pair = 0; pair < 20; ++pair) {
    const Rational a = gen.small_rational(5, 7) + Rational(1, gen.uniform_int(2, 9));
    const Rational b = gen.small_rational(5, 7);
    for (int k = 2; k <= 15; ++k) {
      const Rational v = minimal_splitting(affine(a, b, k)).value;
      const Rational rho = rho_affine(a, b, k);
      t.expect(v == rho, "a=" + to_string(a) + " b=" + to_string(b) + " " + ks(k) + ": value " +
                             to_string(v) + " vs rho " + to_string(rho));
    }
  }
  r.computed = summary(t);
  r.pass = t.failures() == 0;
}

void check_duality(CheckResult& r, int) {
  Tally t(r);
  std::vector<PayoffTable> tables = random_concave_tables();
  for (int k = 2; k <= 25; ++k) {
    for (const auto& f : {basic(k), coordination(k), distance(k), cyclic(k), affine(Rational(2, 3), 1, k),
                          decreasing_affine(1, k - 1, k)}) {
      tables.push_back(f);
    }
    for (int l = 1; l <= k - 1; ++l) tables.push_back(prototype(l, k));
  }
  for (const auto& f : tables) {
    const auto result = minimal_splitting(f);
    const Rational dual = dual_bound(f, result.worst_distribution);
    const bool primal_ok = verify_splitting(f, result.optimal_splitting).satisfied &&
                           result.optimal_splitting.total() == result.value;
    t.expect(primal_ok && dual == result.value,
             f.name() + " " + ks(f.k()) + ": primal " + to_string(result.value) + " dual " + to_string(dual));
  }
  r.computed = summary(t) + " (" + std::to_string(tables.size()) + " tables, zero gap required)";
  r.pass = t.failures() == 0;
}

void check_quick_bounds(CheckResult& r, int) {
  Tally t(r);
  Rational worst_random = 0;
  for (const auto& f : random_concave_tables()) {
    const Rational v = minimal_splitting(f).value;
    t.expect(v <= 4, "random concave " + ks(f.k()) + ": value " + to_string(v));
    if (v > worst_random) worst_random = v;
  }
  Rational worst_left = 0;
  Rational worst_right = 0;
  for (int k = 2; k <= 60; ++k) {
    for (int l = 1; l <= k - 1; ++l) {
      const bool left = l <= k / 2;
      const bool right = l > k / 2 && l <= k - 2;
      if (!left && !right) continue;
      const Rational v = minimal_splitting(prototype(l, k)).value;
      if (left) {
        t.expect(v <= 2, "tent l=" + std::to_string(l) + " " + ks(k) + ": value " + to_string(v));
        if (v > worst_left) worst_left = v;
      } else {
        t.expect(v <= 3, "tent l=" + std::to_string(l) + " " + ks(k) + ": value " + to_string(v));
        if (v > worst_right) worst_right = v;
      }
    }
  }
  r.computed = summary(t) + "; max random " + to_string(worst_random) + ", max left tent " +
               to_string(worst_left) + ", max right tent " + to_string(worst_right);
  r.pass = t.failures() == 0;
}

void check_ongoing(CheckResult& r, int) {
  Tally t(r);
  Rational worst = 0;
  std::string where;
  for (int k = 3; k <= 100; ++k) {
    for (int l = k / 2 + 1; l <= k - 2; ++l) {
      const Rational v = minimal_splitting(prototype(l, k)).optimal_splitting.total();
      t.expect(v <= Rational(5, 2),
               "COUNTEREXAMPLE tent l=" + std::to_string(l) + " " + ks(k) + ": value " + to_string(v));
      if (v > worst) {
        worst = v;
        where = "l=" + std::to_string(l) + " " + ks(k);
      }
    }
  }
  r.computed = summary(t) + "; largest value " + to_string(worst) + " (~" +
               std::to_string(to_double(worst)).substr(0, 6) + ") at " + where;
  r.pass = t.failures() == 0;
}

void check_gadgets(CheckResult& r, int) {
  Tally t(r);
  InstanceGenerator gen(20'250'008);
  auto certify = [&](const Gadget& g, const Rational& expected, const std::string& label) {
    t.expect(is_stable(g.graph, g.payoff, g.stable_coloring).stable, label + ": stable coloring rejected");
    t.expect(g.ratio == expected, label + ": ratio " + to_string(g.ratio) + " vs " + to_string(expected));
  };
  for (int k = 2; k <= 20; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      const Rational a = gen.small_rational(3, 5) + Rational(1, 6);
      const Rational b = gen.small_rational(3, 5);
      certify(gadget_affine(a, b, k), rho_affine(a, b, k), "affine " + ks(k));
      const Rational b2 = a * (k - 1) + (trial == 0 ? Rational(0) : gen.small_rational(3, 5));
      certify(gadget_decreasing(a, b2, k), rho_decreasing(a, b2, k), "decreasing " + ks(k));
    }
    for (int n = 1; n <= 3; ++n) {
      if (k % 2 == 0) certify(gadget_cyclic_even(k, n), 2, "cyclic-even " + ks(k));
      if (k % 2 == 1) {
        certify(gadget_cyclic_odd(k, n), Rational(3, 2) * (1 - Rational(1, k)), "cyclic-odd " + ks(k));
      }
    }
    certify(gadget_coordination(k), k, "coordination " + ks(k));
  }
  r.computed = summary(t);
  r.pass = t.failures() == 0;
}

void check_sandwich(CheckResult& r, int jobs) {
  Tally t(r);
  InstanceGenerator gen(20'250'009);
  int refused = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.uniform_int(2, 6);
    const int k = gen.uniform_int(2, 4);
    const Graph g = gen.graph(n);
    std::vector<PayoffTable> payoffs{basic(k),          coordination(k), distance(k), cyclic(k),
                                     affine(1, 1, k),   decreasing_affine(1, k - 1, k)};
    for (int l = 1; l <= k - 1; ++l) payoffs.push_back(prototype(l, k));
    for (const auto& f : payoffs) {
      const Rational lambda = minimal_splitting(f).value;
      try {
        const PoaReport report = brute_force_poa(g, f, {kDefaultBudget, jobs});
        t.expect(report.poa <= lambda, "graph " + std::to_string(trial) + " " + f.name() + " " + ks(k) +
                                           ": poa " + to_string(report.poa) + " > " + to_string(lambda));
      } catch (const ValidationError&) {
        ++refused;  // zero-welfare stable coloring, ratio unbounded
      }
    }
  }
  for (int k = 2; k <= 4; ++k) {
    std::vector<PayoffTable> payoffs{basic(k),        coordination(k), distance(k), cyclic(k),
                                     affine(1, 1, k), decreasing_affine(1, k - 1, k)};
    for (int l = 1; l <= k - 1; ++l) payoffs.push_back(prototype(l, k));
    for (const auto& f : payoffs) {
      const Rational lambda = minimal_splitting(f).value;
      const Rational o = local_param_oracle(f, 12).value;
      t.expect(o <= lambda, f.name() + " " + ks(k) + ": oracle " + to_string(o) + " > " + to_string(lambda));
    }
  }
  r.computed = summary(t) + "; " + std::to_string(refused) + " instances with zero stable welfare skipped";
  r.pass = t.failures() == 0;
}

void check_small_poa(CheckResult& r, int jobs) {
  Tally t(r);
  const Rational a = brute_force_poa(complete_bipartite(2, 2), basic(2), {kDefaultBudget, jobs}).poa;
  const Rational b = brute_force_poa(complete_bipartite(3, 3), coordination(3), {kDefaultBudget, jobs}).poa;
  t.expect(a == 2, "K2,2 basic k=2: poa " + to_string(a));
  t.expect(b == 3, "K3,3 coordination k=3: poa " + to_string(b));
  r.computed = "K2,2 basic poa " + to_string(a) + ", K3,3 coordination poa " + to_string(b);
  r.pass = t.failures() == 0;
}

void check_dynamics(CheckResult& r, int) {
  Tally t(r);
  InstanceGenerator gen(20'250'011);
  int max_steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.uniform_int(2, 30);
    const int k = gen.uniform_int(2, 6);
    const Graph g = gen.graph(n, gen.uniform_int(5, 50));
    const Coloring start = gen.coloring(n, k);
    const std::string label = "graph " + std::to_string(trial) + " n=" + std::to_string(n);

    const auto trace = run_improvement_dynamics(g, basic(k), start, Schedule::random(trial));
    t.expect(trace.step_count() <= g.edge_count(), label + ": " + std::to_string(trace.step_count()) +
                                                       " steps > m=" + std::to_string(g.edge_count()));
    t.expect(is_stable(g, basic(k), trace.final_coloring).stable, label + ": final coloring unstable");
    if (trace.step_count() > max_steps) max_steps = trace.step_count();

    for (const auto& f : {basic(k), coordination(k), distance(k), cyclic(k), gen.concave_table(k)}) {
      const auto run = run_improvement_dynamics(g, f, start);
      Coloring c = start;
      Rational last = welfare(g, f, c);
      bool increasing = true;
      for (const auto& step : run.steps) {
        c = change(c, step.vertex, step.to);
        const Rational w = welfare(g, f, c);
        increasing = increasing && w > last && w == step.welfare_after;
        last = w;
      }
      t.expect(increasing, label + " " + f.name() + ": welfare not strictly increasing");
      t.expect(is_stable(g, f, run.final_coloring).stable, label + " " + f.name() + ": final coloring unstable");
    }

    const Coloring two = run_improvement_dynamics(g, basic(2), gen.coloring(n, 2)).final_coloring;
    for (int kk = 2; kk <= 8; ++kk) {
      t.expect(is_stable(g, distance(kk), lift_stable(g, LiftMode::distance, kk, two)).stable,
               label + ": distance lift unstable at " + ks(kk));
      if (kk % 2 == 0) {
        t.expect(is_stable(g, cyclic(kk), lift_stable(g, LiftMode::cyclic_even, kk, two)).stable,
                 label + ": cyclic lift unstable at " + ks(kk));
      }
    }
  }
  r.computed = summary(t) + "; most steps under basic payoff " + std::to_string(max_steps);
  r.pass = t.failures() == 0;
}

void check_quick_response(CheckResult& r, int) {
  Tally t(r);
  InstanceGenerator gen(20'250'012);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = gen.uniform_int(2, 20);
    const int nu = gen.uniform_int(1, 12);
    PayoffTable f = basic(k);
    switch (trial % 5) {
      case 0: f = basic(k); break;
      case 1: f = distance(k); break;
      case 2: f = cyclic(k); break;
      case 3: f = prototype(gen.uniform_int(1, k - 1), k); break;
      default: f = gen.concave_table(k); break;
    }
    const std::vector<Color> colors = gen.colors(nu, k);
    const Color c = quick_response(colors, f);
    const Rational got = response_payoff(colors, f, c);
    t.expect(4 * got >= nu * f.f_star(), f.name() + " " + ks(k) + " nu=" + std::to_string(nu) + ": payoff " +
                                             to_string(got) + " < nu f*/4");
  }
  r.computed = summary(t);
  r.pass = t.failures() == 0;
}

void check_footnote(CheckResult& r, int) {
  Tally t(r);
  for (int k = 3; k <= 21; k += 2) {
    for (int n = 1; n <= 3; ++n) {
      const Graph g = cycle_graph(4 * n);
      const PayoffTable f = cyclic(k);
      const Coloring c = cyclic_pair_pattern(k, n);
      const Color k1 = k / 2 + 1;
      const Color k2 = k1 + 1;
      const auto verdict = is_stable(g, f, c);
      t.expect(!verdict.stable, ks(k) + " n=" + std::to_string(n) + ": accepted as stable");
      // Vertex 3 is the first vertex colored k1; its neighbors are k1 and 1.
      const Rational before = player_payoff(g, f, c, 3);
      const Rational after = player_payoff(g, f, change(c, 3, k2), 3);
      t.expect(after > before, ks(k) + ": move k1 -> k2 does not improve");
      t.expect(best_response(g, f, c, 3).color == k2, ks(k) + ": best response of a k1 vertex is not k2");
      if (k == 5 && n == 1) {
        r.details.push_back("k=5 witness: vertex 3 moves " + std::to_string(k1) + " -> " + std::to_string(k2) +
                            ", payoff " + to_string(before) + " -> " + to_string(after));
      }
    }
  }
  r.computed = summary(t);
  r.pass = t.failures() == 0;
}

struct CheckSpec {
  const char* title;
  const char* basis;
  const char* expected;
  double limit;
  bool slow;
  void (*run)(CheckResult&, int);
};

const CheckSpec kChecks[] = {
    {"local parameter of basic payoff", "tight bound k/(k-1) for max-k-cut games",
     "lambda(basic,k) = k/(k-1), k = 2..10", 1, false, check_basic},
    {"local parameter of coordination payoff", "coordination bound k, tight on K_{k,k}",
     "lambda(coordination,k) = k, k = 2..10", 1, false, check_coordination},
    {"local parameter of cyclic payoff", "cyclic splitting 1+1, best possible for even k",
     "= 2 for even k <= 40; in [(3/2)(1-1/k), 2] for odd k <= 39", 5, false, check_cyclic},
    {"local parameter of affine payoff", "affine splitting rho/2 + rho/2 with matching K_{2,2} gadget",
     "lambda(affine(a,b,k)) = rho(a,b,k), 20 pairs, k = 2..15", 5, false, check_affine},
    {"strong duality, zero gap", "splitting program and neighbor-distribution program are LP duals",
     "minimal_splitting.value = dual_bound(worst distribution)", 30, false, check_duality},
    {"concave bounds 4, 2 and 3", "constructive response (4), left tents (2), right tents (3)",
     "lambda <= 4 random concave; tents <= 2 left of middle, <= 3 right, k <= 60", 60, false,
     check_quick_bounds},
    {"tents right of the middle below 5/2", "splittings 1+1+1/4+1/4 found for all k <= 100",
     "lambda(prototype(l,k)) <= 5/2 for floor(k/2) < l <= k-2, k <= 100", 600, true, check_ongoing},
    {"gadget tightness", "lower-bound constructions on K_{2,2}, cycles and K_{k,k}",
     "ratios rho, rho', 2, (3/2)(1-1/k), k; stable colorings certified; k <= 20, n <= 3", 10, false,
     check_gadgets},
    {"oracle sandwich", "PoA(G,k,f) <= lambda(f,k) and the enumeration oracle never exceeds the LP",
     "poa <= lambda on 50 random graphs (n <= 6, k <= 4); oracle(f,12) <= lambda", 120, false,
     check_sandwich},
    {"exact PoA on K_{2,2} and K_{3,3}", "k/(k-1) at k = 2 and coordination bound k at k = 3",
     "poa(K2,2, basic, 2) = 2; poa(K3,3, coordination, 3) = 3", 5, false, check_small_poa},
    {"improvement dynamics and lifting", "potential argument; O(m) steps for basic payoff; stable lifts",
     "<= m steps and stable end for basic payoff; strictly rising welfare; stable lifts", 30, false,
     check_dynamics},
    {"constructive response guarantee", "answer ceil((k +- k*)/2) by majority side",
     "sum f(|c_i - t|) >= nu f*/4 on 1000 instances, k <= 20, nu <= 12", 10, false, check_quick_response},
    {"even-cycle coloring unstable for odd k", "a k1-colored vertex gains by moving to k2",
     "is_stable rejects; move k1 -> k2 strictly improves", 1, false, check_footnote},
};

constexpr int kCheckCount = static_cast<int>(std::size(kChecks));

}  // namespace

int check_count() { return kCheckCount; }

bool check_is_slow(int id) {
  if (id < 1 || id > kCheckCount) throw ValidationError("unknown check id " + std::to_string(id));
  return kChecks[id - 1].slow;
}

CheckResult run_check(int id, int jobs) {
  if (id < 1 || id > kCheckCount) throw ValidationError("unknown check id " + std::to_string(id));
  const CheckSpec& spec = kChecks[id - 1];
  CheckResult r;
  r.id = id;
  r.title = spec.title;
  r.basis = spec.basis;
  r.expected = spec.expected;
  r.time_limit = spec.limit;
  r.slow = spec.slow;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(r, jobs);
  } catch (const std::exception& e) {
    r.pass = false;
    r.computed = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.time_limit) {
    r.pass = false;
    r.details.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.time_limit) + " s");
  }
  return r;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) {
    if (options.scope == VerifyScope::fast && kChecks[id - 1].slow) continue;
    out.push_back(run_check(id, options.jobs));
    if (options.on_result) options.on_result(out.back());
  }
  return out;
}

}  // namespace colorgame
