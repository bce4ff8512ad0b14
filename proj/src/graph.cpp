#include "hyperlat/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hyperlat {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n_) {
      throw std::invalid_argument("Graph: edge endpoint " + std::to_string(a < 0 ? a : b) +
                                  " outside [0," + std::to_string(n_) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("Graph: duplicate edge");
  }
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  inc_.assign(n_, {});
  for (int e = 0; e < edge_count(); ++e) {
    const auto [a, b] = edges_[e];
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    inc_[a].push_back(e);
    inc_[b].push_back(e);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
  return -1;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
    }
  }
  return reached == n_;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix m(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = 1.0;
    m(b, a) = 1.0;
  }
  return m;
}

Matrix degree_matrix(const Graph& g) {
  Matrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m(v, v) = g.degree(v);
  return m;
}

Matrix laplacian(const Graph& g) {
  Matrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m(v, v) = g.degree(v);
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = -1.0;
    m(b, a) = -1.0;
  }
  return m;
}

Matrix signless_laplacian(const Graph& g) {
  Matrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m(v, v) = g.degree(v);
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = 1.0;
    m(b, a) = 1.0;
  }
  return m;
}

std::optional<std::vector<int>> bipartite_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::queue<int> bfs;
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    bfs.push(start);
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          bfs.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartite_coloring(g).has_value(); }

int girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge between depths d(x), d(y) closes
  // a cycle of length d(x) + d(y) + 1 through the root.
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> bfs;
    dist[root] = 0;
    bfs.push(root);
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      if (best > 0 && 2 * dist[v] >= best) continue;
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          bfs.push(w);
        } else if (w != parent[v]) {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace hyperlat
