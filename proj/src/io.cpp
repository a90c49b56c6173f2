#include "colorgame/io.hpp"

#include "colorgame/errors.hpp"

#include <fstream>
#include <sstream>

namespace colorgame {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int parse_int(std::string_view token, const std::string& what) {
  const Rational r = parse_rational(token);
  if (denominator(r) != 1) throw ValidationError(what + " must be an integer, got '" + std::string(token) + "'");
  if (abs(numerator(r)) > 1'000'000'000) throw ValidationError(what + " out of range");
  return numerator(r).convert_to<int>();
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = text.find(sep);
    out.push_back(trim(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

// Parameters of affine/decreasing specs: "a,b", or "a/b" for integer a and b.
std::pair<Rational, Rational> parse_pair(std::string_view params, std::string_view family) {
  std::vector<std::string_view> parts = split(params, ',');
  if (parts.size() == 1) parts = split(params, '/');
  if (parts.size() != 2) {
    throw ValidationError("payoff '" + std::string(family) + "' expects two parameters a,b");
  }
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw ValidationError("graph line " + std::to_string(line_no) + ": expected two fields");
    }
    if (!n) {
      if (a != "n") throw ValidationError("graph file must start with 'n <count>'");
      n = parse_int(b, "vertex count");
    } else {
      edges.emplace_back(parse_int(a, "vertex id"), parse_int(b, "vertex id"));
    }
  }
  if (!n) throw ValidationError("graph file has no 'n <count>' header");
  return validate_graph(edges, *n);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, w] : g.edges()) out << u << " " << w << "\n";
  return out.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<Color> colors;
  while (in >> token) {
    if (token.front() == '#') {
      std::getline(in, token);
      continue;
    }
    colors.push_back(parse_int(token, "color"));
  }
  if (colors.empty()) throw ValidationError("coloring is empty");
  return Coloring(std::move(colors));
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream out;
  for (int i = 0; i < c.size(); ++i) out << (i ? " " : "") << c.colors()[i];
  out << "\n";
  return out.str();
}

Coloring read_coloring_file(const std::string& path) { return parse_coloring(slurp(path)); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

PayoffTable parse_payoff_spec(std::string_view spec, std::optional<int> k) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (family == "table") {
    std::vector<Rational> values = parse_rational_list(params);
    if (k && static_cast<int>(values.size()) != *k + 1) {
      throw ValidationError("table has " + std::to_string(values.size()) +
                            " values but k = " + std::to_string(*k) + " needs k+1");
    }
    return PayoffTable::from_values(std::move(values), "table");
  }
  if (!k) throw ValidationError("payoff '" + std::string(spec) + "' needs k");
  const bool has_params = colon != std::string_view::npos;
  auto no_params = [&] {
    if (has_params) throw ValidationError("payoff '" + std::string(family) + "' takes no parameters");
  };
  if (family == "basic") return no_params(), basic(*k);
  if (family == "coordination") return no_params(), coordination(*k);
  if (family == "distance") return no_params(), distance(*k);
  if (family == "cyclic") return no_params(), cyclic(*k);
  if (family == "affine") {
    const auto [a, b] = parse_pair(params, family);
    return affine(a, b, *k);
  }
  if (family == "decreasing") {
    const auto [a, b] = parse_pair(params, family);
    return decreasing_affine(a, b, *k);
  }
  if (family == "proto") return prototype(parse_int(params, "prototype peak"), *k);
  throw ValidationError("unknown payoff spec '" + std::string(spec) + "'");
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Coloring& c) {
  Json j = Json::array();
  for (Color t : c.colors()) j.push_back(t);
  return j;
}

Json to_json(const PayoffTable& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(to_string(v));
  Json star = Json::array();
  for (int d : dis_star(f)) star.push_back(d);
  return Json{{"name", f.name()},          {"k", f.k()},
              {"values", std::move(values)}, {"concave", f.is_concave()},
              {"f_star", to_string(f.f_star())}, {"dis_star", std::move(star)}};
}

Json to_json(const Splitting& s) {
  Json weights = Json::array();
  for (const auto& w : s.weights()) weights.push_back(to_string(w));
  return Json{{"weights", std::move(weights)}, {"total", to_string(s.total())}};
}

Json to_json(const Distribution& d) {
  Json weights = Json::array();
  for (const auto& w : d.weights()) weights.push_back(to_string(w));
  return weights;
}

Json to_json(const PoaReport& report) {
  return Json{{"opt_welfare", to_json(report.opt_welfare)},
              {"worst_stable_welfare", to_json(report.worst_stable_welfare)},
              {"poa", to_json(report.poa)},
              {"witness_opt", to_json(report.witness_opt)},
              {"witness_worst", to_json(report.witness_worst)},
              {"colorings_scanned", report.colorings_scanned}};
}

Json to_json(const LocalParamResult& result) {
  return Json{{"value", to_json(result.value)},
              {"splitting", to_json(result.optimal_splitting)},
              {"distribution", to_json(result.worst_distribution)},
              {"dual_value", to_json(result.dual_value)}};
}

Json to_json(const BoundReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.applicable) {
    entries.push_back(Json{{"rule", e.rule}, {"bound", to_json(e.bound)}, {"basis", e.basis}});
  }
  return Json{{"applicable", std::move(entries)},
              {"best", report.best ? to_json(*report.best) : Json(nullptr)}};
}

Json to_json(const Gadget& gadget) {
  return Json{{"family", gadget.family},
              {"k", gadget.k},
              {"n", gadget.graph.vertex_count()},
              {"m", gadget.graph.edge_count()},
              {"payoff", to_json(gadget.payoff)},
              {"stable_coloring", to_json(gadget.stable_coloring)},
              {"opt_coloring", to_json(gadget.opt_coloring)},
              {"stable_welfare", to_json(gadget.stable_welfare)},
              {"opt_welfare", to_json(gadget.opt_welfare)},
              {"ratio", to_json(gadget.ratio)}};
}

Json to_json(const DynamicsStep& step) {
  return Json{{"v", step.vertex},
              {"from", step.from},
              {"to", step.to},
              {"welfare", to_json(step.welfare_after)}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i), out);
  } else {
    out += csv_field(path) + "," + csv_field(j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string to_csv(const Json& j) {
  std::string out = "path,value\n";
  flatten(j, "", out);
  return out;
}

}  // namespace colorgame
