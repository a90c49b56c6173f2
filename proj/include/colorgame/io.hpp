#pragma once

#include "colorgame/bounds.hpp"
#include "colorgame/dynamics.hpp"
#include "colorgame/exhaustive.hpp"
#include "colorgame/game.hpp"
#include "colorgame/graph.hpp"
#include "colorgame/local_parameter.hpp"
#include "colorgame/payoff.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace colorgame {

// Graph file: first non-comment line "n <count>", then one "u w" edge per
// line, 1-based. Lines starting with '#' and blank lines are skipped.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

// Coloring file: one line of space-separated colors.
Coloring parse_coloring(std::string_view text);
std::string format_coloring(const Coloring& c);
Coloring read_coloring_file(const std::string& path);

// Payoff spec strings:
//   basic | coordination | distance | cyclic | proto:<l>
//   affine:<a>,<b> | decreasing:<a>,<b>     (a, b rationals "p/q" or integers)
//   affine:<a>/<b> | decreasing:<a>/<b>     (integers a, b)
//   table:<v0>,<v1>,...,<vk>
// `k` may be omitted only for table specs, where it is the length minus one.
PayoffTable parse_payoff_spec(std::string_view spec, std::optional<int> k);

// Comma-separated rationals, e.g. "1,1,1/4,1/4".
std::vector<Rational> parse_rational_list(std::string_view text);

using Json = nlohmann::ordered_json;

// Rationals are always serialized as "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const Coloring& c);
Json to_json(const PayoffTable& f);
Json to_json(const Splitting& s);
Json to_json(const Distribution& d);
Json to_json(const PoaReport& report);
Json to_json(const LocalParamResult& result);
Json to_json(const BoundReport& report);
Json to_json(const Gadget& gadget);
Json to_json(const DynamicsStep& step);

// "path,value" rows of every leaf of `j`; nested keys joined with '.', array
// elements addressed by index. Values are the same strings the JSON holds.
std::string to_csv(const Json& j);

}  // namespace colorgame
