#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

using Edge = std::pair<int, int>;  // canonical form: first < second

// Undirected simple graph on dense vertex ids 0..n-1. Edges are stored
// canonically ordered (min,max) and lexicographically sorted, so the index
// of an edge in edges() doubles as the id of the corresponding line-graph
// vertex.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  // Ids of edges incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  int max_degree() const;

  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 if absent

  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

Matrix adjacency_matrix(const Graph& g);
Matrix degree_matrix(const Graph& g);
Matrix laplacian(const Graph& g);           // D - A
Matrix signless_laplacian(const Graph& g);  // D + A

// Two-coloring (values 0/1) when the graph has no odd cycle, nullopt
// otherwise. Exact BFS check, no tolerances involved.
std::optional<std::vector<int>> bipartite_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

// Length of a shortest cycle; 0 for forests.
int girth(const Graph& g);

}  // namespace hyperlat
