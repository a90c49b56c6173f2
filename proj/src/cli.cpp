#include "colorgame/cli.hpp"

#include "colorgame/bounds.hpp"
#include "colorgame/dynamics.hpp"
#include "colorgame/errors.hpp"
#include "colorgame/exhaustive.hpp"
#include "colorgame/io.hpp"
#include "colorgame/local_parameter.hpp"
#include "colorgame/random_instances.hpp"
#include "colorgame/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace colorgame {

namespace {

int require_k(const RunConfig& config) {
  if (!config.k) throw ValidationError("--k is required for " + config.command);
  if (*config.k < 2) throw ValidationError("--k must be >= 2, got " + std::to_string(*config.k));
  return *config.k;
}

PayoffTable require_payoff(const RunConfig& config) {
  if (config.payoff.empty()) throw ValidationError("--payoff is required for " + config.command);
  PayoffTable f = parse_payoff_spec(config.payoff, config.k);
  if (config.k && f.k() != *config.k) {
    throw ValidationError("payoff has k = " + std::to_string(f.k()) + " but --k is " + std::to_string(*config.k));
  }
  return f;
}

Graph require_graph(const RunConfig& config) {
  if (config.graph_path.empty()) throw ValidationError("--graph is required for " + config.command);
  return read_graph_file(config.graph_path);
}

void emit(const Json& j, const RunConfig& config, std::ostream& out) {
  if (config.format == OutputFormat::csv) {
    out << to_csv(j);
  } else {
    out << (config.pretty ? j.dump(2) : j.dump()) << "\n";
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text;
}

int cmd_poa(const RunConfig& config, std::ostream& out) {
  const PayoffTable f = require_payoff(config);
  const Graph g = require_graph(config);
  emit(to_json(brute_force_poa(g, f, {config.budget, config.jobs})), config, out);
  return kExitOk;
}

int cmd_local_param(const RunConfig& config, std::ostream& out) {
  const PayoffTable f = require_payoff(config);
  const LocalParamResult r = minimal_splitting(f);
  Json j = to_json(r);
  j["k"] = f.k();
  j["payoff"] = f.name();
  emit(j, config, out);
  return kExitOk;
}

int cmd_split_min(const RunConfig& config, std::ostream& out) {
  const PayoffTable f = require_payoff(config);
  const LocalParamResult r = minimal_splitting(f);
  const SplittingCheck primal = verify_splitting(f, r.optimal_splitting);
  const Rational dual = dual_bound(f, r.worst_distribution);
  Json j = Json::object();
  j["payoff"] = to_json(f);
  j["value"] = to_json(r.value);
  j["primal"] = Json{{"splitting", to_json(r.optimal_splitting)},
                     {"condition_holds", primal.satisfied},
                     {"coverage", Json::array()}};
  for (const auto& c : response_profile(f, r.optimal_splitting.weights())) {
    j["primal"]["coverage"].push_back(to_json(c));
  }
  j["dual"] = Json{{"distribution", to_json(r.worst_distribution)}, {"bound", to_json(dual)}};
  j["gap"] = to_json(r.value - dual);
  j["pivots"] = r.pivots;
  emit(j, config, out);
  return kExitOk;
}

int cmd_split_search(const RunConfig& config, std::ostream& out) {
  const PayoffTable f = require_payoff(config);
  if (config.delta.empty()) throw ValidationError("--delta is required for split-search");
  const std::vector<Rational> delta = parse_rational_list(config.delta);
  const auto found = delta_grid_search(f, delta, config.budget, config.jobs);
  Rational total = 0;
  for (const auto& d : delta) total += d;
  Json list = Json::array();
  for (const auto& s : found) list.push_back(to_json(s));
  emit(Json{{"k", f.k()}, {"total", to_json(total)}, {"count", found.size()}, {"splittings", std::move(list)}},
       config, out);
  return kExitOk;
}

int cmd_bound(const RunConfig& config, std::ostream& out) {
  const PayoffTable f = require_payoff(config);
  Json j = to_json(upper_bounds(f));
  j["local_parameter"] = to_json(minimal_splitting(f).value);
  if (f.k() % 2 == 1 && f.k() >= 3 && f == cyclic(f.k())) {
    j["lower_bound"] = to_json(gadget_cyclic_odd(f.k(), 1).ratio);
  }
  j["payoff"] = to_json(f);
  emit(j, config, out);
  return kExitOk;
}

int cmd_gadget(const RunConfig& config, std::ostream& out) {
  const std::string& family = config.family;
  Gadget gadget = [&] {
    if (family == "affine") return gadget_affine(parse_rational(config.a), parse_rational(config.b), require_k(config));
    if (family == "decreasing") {
      return gadget_decreasing(parse_rational(config.a), parse_rational(config.b), require_k(config));
    }
    if (family == "cyclic-even") return gadget_cyclic_even(require_k(config), config.n);
    if (family == "cyclic-odd") return gadget_cyclic_odd(require_k(config), config.n);
    if (family == "coordination") return gadget_coordination(require_k(config));
    throw ValidationError("unknown gadget family '" + family +
                          "' (affine, decreasing, cyclic-even, cyclic-odd, coordination)");
  }();
  Json j = to_json(gadget);
  if (!config.out_prefix.empty()) {
    const std::string graph_path = config.out_prefix + ".graph";
    const std::string stable_path = config.out_prefix + ".coloring";
    const std::string opt_path = config.out_prefix + ".opt.coloring";
    write_file(graph_path, format_graph(gadget.graph));
    write_file(stable_path, format_coloring(gadget.stable_coloring));
    write_file(opt_path, format_coloring(gadget.opt_coloring));
    j["files"] = Json{{"graph", graph_path}, {"stable_coloring", stable_path}, {"opt_coloring", opt_path}};
  } else {
    Json edges = Json::array();
    for (const auto& [u, w] : gadget.graph.edges()) edges.push_back(Json::array({u, w}));
    j["edges"] = std::move(edges);
  }
  emit(j, config, out);
  return kExitOk;
}

int cmd_dynamics(const RunConfig& config, std::ostream& out) {
  const PayoffTable f = require_payoff(config);
  const Graph g = require_graph(config);
  Coloring start;
  if (!config.start_path.empty()) {
    start = read_coloring_file(config.start_path);
  } else {
    InstanceGenerator gen(config.seed);
    start = gen.coloring(g.vertex_count(), f.k());
  }
  validate_coloring(g, f.k(), start);

  Schedule schedule;
  if (config.schedule == "random") {
    schedule = Schedule::random(config.seed);
  } else if (config.schedule != "round-robin") {
    throw ValidationError("unknown schedule '" + config.schedule + "' (round-robin, random)");
  }
  MoveRule rule = MoveRule::best_response;
  if (config.rule == "first") {
    rule = MoveRule::first_improvement;
  } else if (config.rule != "best") {
    throw ValidationError("unknown move rule '" + config.rule + "' (best, first)");
  }

  const DynamicsTrace trace = run_improvement_dynamics(g, f, start, schedule, rule);
  Json summary{{"start", to_json(start)},
               {"initial_welfare", to_json(trace.initial_welfare)},
               {"final", to_json(trace.final_coloring)},
               {"final_welfare", to_json(welfare(g, f, trace.final_coloring))},
               {"steps", trace.step_count()},
               {"stable", is_stable(g, f, trace.final_coloring).stable}};
  if (config.format == OutputFormat::csv) {
    Json all = Json::object();
    all["trace"] = Json::array();
    for (const auto& step : trace.steps) all["trace"].push_back(to_json(step));
    all["summary"] = std::move(summary);
    out << to_csv(all);
  } else {
    for (const auto& step : trace.steps) out << to_json(step).dump() << "\n";
    out << Json{{"summary", std::move(summary)}}.dump() << "\n";
  }
  return kExitOk;
}

Json to_json(const CheckResult& r) {
  Json details = Json::array();
  for (const auto& d : r.details) details.push_back(d);
  return Json{{"id", r.id},
              {"title", r.title},
              {"basis", r.basis},
              {"expected", r.expected},
              {"computed", r.computed},
              {"pass", r.pass},
              {"slow", r.slow},
              {"seconds", r.seconds},
              {"time_limit", r.time_limit},
              {"details", std::move(details)}};
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  if (config.scope == "all") {
    options.scope = VerifyScope::all;
  } else if (config.scope != "fast") {
    throw ValidationError("unknown scope '" + config.scope + "' (fast, all)");
  }
  options.jobs = config.jobs;
  options.on_result = [&](const CheckResult& r) {
    err << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << ": " << r.computed << "\n";
  };
  const auto results = run_verification(options);
  Json checks = Json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    checks.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  emit(Json{{"scope", config.scope}, {"pass", all_pass}, {"checks", std::move(checks)}}, config, out);
  return all_pass ? kExitOk : kExitCheckFailed;
}

std::uint64_t default_budget() {
  const char* env = std::getenv("COLORGAME_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  const std::string text = env;
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19 || std::stoull(text) == 0) {
    throw ValidationError("COLORGAME_BUDGET must be a positive integer, got '" + text + "'");
  }
  return std::stoull(text);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.budget < 1) throw ValidationError("--budget must be >= 1");
    if (config.jobs < 1) throw ValidationError("--jobs must be >= 1");
    if (config.k) require_k(config);
    const std::string& c = config.command;
    if (c == "poa") return cmd_poa(config, out);
    if (c == "local-param") return cmd_local_param(config, out);
    if (c == "split-min") return cmd_split_min(config, out);
    if (c == "split-search") return cmd_split_search(config, out);
    if (c == "bound") return cmd_bound(config, out);
    if (c == "gadget") return cmd_gadget(config, out);
    if (c == "dynamics") return cmd_dynamics(config, out);
    if (c == "verify") return cmd_verify(config, out, err);
    throw ValidationError("unknown command '" + c + "'");
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << " (required " << e.required() << ", budget " << e.budget()
        << "; raise --budget or COLORGAME_BUDGET)\n";
    return kExitBudget;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitTheorem;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.budget = default_budget();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  CLI::App app{"Graph coloring games with concave payoff: exact price of anarchy, local parameter, "
               "splittings, gadgets and dynamics."};
  app.require_subcommand(1);

  int k_value = 0;
  std::string format_text = "json";
  auto add_payoff = [&](CLI::App* sub, bool payoff_required) {
    sub->add_option("--k", k_value, "number of colors (k >= 2)");
    auto* p = sub->add_option("--payoff", config.payoff,
                              "basic | coordination | distance | cyclic | proto:l | affine:a,b | "
                              "decreasing:a,b | table:v0,...,vk");
    if (payoff_required) p->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--pretty", config.pretty, "indent JSON output");
    sub->add_option("--jobs", config.jobs, "worker threads");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", config.budget, "maximum enumeration size (default $COLORGAME_BUDGET or 10^7)");
  };

  auto* poa = app.add_subcommand("poa", "exact price of anarchy by enumeration");
  add_payoff(poa, true);
  poa->add_option("--graph", config.graph_path, "graph file")->required();
  add_budget(poa);
  add_common(poa);

  auto* local = app.add_subcommand("local-param", "exact local parameter with splitting and distribution");
  add_payoff(local, true);
  add_common(local);

  auto* split_min = app.add_subcommand("split-min", "minimal splitting with primal and dual certificates");
  add_payoff(split_min, true);
  add_common(split_min);

  auto* split_search = app.add_subcommand("split-search", "all grid splittings that cover f* at every color");
  add_payoff(split_search, true);
  split_search->add_option("--delta", config.delta, "comma-separated positive rationals, e.g. 1,1,1/4,1/4")
      ->required();
  add_budget(split_search);
  add_common(split_search);

  auto* gadget = app.add_subcommand("gadget", "lower-bound instance with certified stable coloring");
  gadget->add_option("--family", config.family, "affine | decreasing | cyclic-even | cyclic-odd | coordination")
      ->required();
  gadget->add_option("--k", k_value, "number of colors")->required();
  gadget->add_option("--a", config.a, "slope a (affine, decreasing)");
  gadget->add_option("--b", config.b, "intercept b (affine, decreasing)");
  gadget->add_option("--n", config.n, "cycle repetitions (cyclic families)");
  gadget->add_option("--out-prefix", config.out_prefix,
                     "write <prefix>.graph, <prefix>.coloring and <prefix>.opt.coloring");
  add_common(gadget);

  auto* dynamics = app.add_subcommand("dynamics", "improvement dynamics trace as JSON lines");
  add_payoff(dynamics, true);
  dynamics->add_option("--graph", config.graph_path, "graph file")->required();
  dynamics->add_option("--start", config.start_path, "starting coloring file (default: random from --seed)");
  dynamics->add_option("--schedule", config.schedule, "round-robin | random");
  dynamics->add_option("--rule", config.rule, "best | first");
  dynamics->add_option("--seed", config.seed, "seed for the random start and schedule");
  add_common(dynamics);

  auto* bound = app.add_subcommand("bound", "applicable upper bounds on the price of anarchy");
  add_payoff(bound, true);
  add_common(bound);

  auto* verify = app.add_subcommand("verify", "run the theorem checks");
  verify->add_option("--scope", config.scope, "fast | all");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (const CLI::Option* k = chosen->get_option_no_throw("--k"); k != nullptr && k->count() > 0) config.k = k_value;
  config.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::json;
  return run(config, out, err);
}

}  // namespace colorgame
