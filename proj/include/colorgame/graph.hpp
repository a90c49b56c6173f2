#pragma once

#include <span>
#include <utility>
#include <vector>

namespace colorgame {

// Vertices and colors are 1-based throughout.
using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph without isolated vertices. Construct through
// validate_graph; instances always satisfy the invariants.
class Graph {
 public:
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges with u < w, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v - 1].size()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph validate_graph(std::span<const Edge> raw_edges, int n);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Builds a Graph on vertices 1..n. Throws ValidationError naming the offending
// element for self-loops, duplicate edges (in either orientation),
// out-of-range ids and isolated vertices.
Graph validate_graph(std::span<const Edge> raw_edges, int n);

// Convenience families used by gadgets and tests.
Graph complete_bipartite(int left, int right);  // left side 1..left
Graph cycle_graph(int n);                       // 1-2-...-n-1, n >= 3
Graph path_graph(int n);                        // 1-2-...-n, n >= 2

}  // namespace colorgame
