#include "colorgame/graph.hpp"

#include "colorgame/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace colorgame {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph validate_graph(std::span<const Edge> raw_edges, int n) {
  if (n < 2) {
    throw ValidationError("graph needs at least 2 vertices, got " + std::to_string(n));
  }
  std::set<Edge> seen;
  Graph g;
  g.adjacency_.assign(n, {});
  for (const Edge& e : raw_edges) {
    const auto [u, w] = e;
    if (u < 1 || u > n || w < 1 || w > n) {
      throw ValidationError("edge " + edge_text(e) + " has a vertex outside 1.." +
                            std::to_string(n));
    }
    if (u == w) throw ValidationError("self-loop " + edge_text(e));
    const Edge key{std::min(u, w), std::max(u, w)};
    if (!seen.insert(key).second) throw ValidationError("duplicate edge " + edge_text(e));
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (const auto& [u, w] : g.edges_) {
    g.adjacency_[u - 1].push_back(w);
    g.adjacency_[w - 1].push_back(u);
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (g.adjacency_[v - 1].empty()) {
      throw ValidationError("vertex " + std::to_string(v) + " is isolated");
    }
    std::sort(g.adjacency_[v - 1].begin(), g.adjacency_[v - 1].end());
  }
  return g;
}

Graph complete_bipartite(int left, int right) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= left; ++u) {
    for (Vertex w = left + 1; w <= left + right; ++w) edges.emplace_back(u, w);
  }
  return validate_graph(edges, left + right);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
  return validate_graph(edges, n);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return validate_graph(edges, n);
}

}  // namespace colorgame
