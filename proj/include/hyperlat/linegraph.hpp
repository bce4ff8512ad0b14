#pragma once

#include <cstdint>
#include <vector>

#include "hyperlat/graph.hpp"
#include "hyperlat/matrix.hpp"

namespace hyperlat {

// Head/foot assignment per layout edge, indexed by layout edge id.
struct Orientation {
  std::vector<std::pair<int, int>> foot_head;  // (foot, head)

  int foot(int edge) const { return foot_head[edge].first; }
  int head(int edge) const { return foot_head[edge].second; }
};

// Deterministic orientation: foot = smaller endpoint, head = larger.
Orientation default_orientation(const Graph& g);
Orientation random_orientation(const Graph& g, std::uint64_t seed);

struct LineGraphResult {
  Graph graph;                 // vertices are layout edge ids
  std::vector<Edge> back_map;  // line-graph vertex -> layout edge
};

// Line graph: one vertex per layout edge, adjacent iff the edges share a
// layout vertex. Each layout vertex of degree k induces a K_k clique.
LineGraphResult line_graph(const Graph& layout);

// Line graph with +-1 edge weights induced by an orientation of the layout:
// +1 when the shared vertex is head of both or foot of both edges, -1 when
// it is head of one and foot of the other.
struct SignedLineGraph {
  Graph base;
  std::vector<Edge> back_map;
  Orientation orientation;
  std::vector<int> signs;  // per base edge, aligned with base.edges()

  Matrix signed_adjacency() const;
};

SignedLineGraph signed_line_graph(const Graph& layout, const Orientation& o);

// Reverses one layout edge. Equivalent to conjugating the signed adjacency
// by a diagonal +-1 matrix, so the spectrum is preserved; applying the same
// switch twice restores the original sign pattern.
SignedLineGraph switch_edge(SignedLineGraph slg, int layout_edge);
SignedLineGraph switch_edge(SignedLineGraph slg, Edge layout_edge);

}  // namespace hyperlat
