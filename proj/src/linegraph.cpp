#include "hyperlat/linegraph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hyperlat {

Orientation default_orientation(const Graph& g) {
  Orientation o;
  o.foot_head.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) o.foot_head.emplace_back(a, b);
  return o;
}

Orientation random_orientation(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Orientation o;
  o.foot_head.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) {
    if (rng() & 1u) {
      o.foot_head.emplace_back(b, a);
    } else {
      o.foot_head.emplace_back(a, b);
    }
  }
  return o;
}

LineGraphResult line_graph(const Graph& layout) {
  if (layout.edge_count() == 0) {
    throw std::invalid_argument("line_graph: layout has no edges");
  }
  std::vector<Edge> lg_edges;
  for (int v = 0; v < layout.vertex_count(); ++v) {
    const auto& inc = layout.incident_edges(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        lg_edges.emplace_back(inc[a], inc[b]);
      }
    }
  }
  // Two distinct layout edges share at most one vertex, so no duplicates.
  LineGraphResult res;
  res.graph = Graph(layout.edge_count(), std::move(lg_edges));
  res.back_map = layout.edges();
  return res;
}

namespace {

int shared_vertex(const Edge& a, const Edge& b) {
  if (a.first == b.first || a.first == b.second) return a.first;
  if (a.second == b.first || a.second == b.second) return a.second;
  throw std::logic_error("signed_line_graph: adjacent line-graph vertices share no layout vertex");
}

}  // namespace

SignedLineGraph signed_line_graph(const Graph& layout, const Orientation& o) {
  if (static_cast<int>(o.foot_head.size()) != layout.edge_count()) {
    throw std::invalid_argument("signed_line_graph: orientation does not cover every edge");
  }
  for (int e = 0; e < layout.edge_count(); ++e) {
    const auto [foot, head] = o.foot_head[e];
    const auto [a, b] = layout.edges()[e];
    if (!((foot == a && head == b) || (foot == b && head == a))) {
      throw std::invalid_argument("signed_line_graph: orientation endpoints mismatch edge " +
                                  std::to_string(e));
    }
  }

  LineGraphResult lg = line_graph(layout);
  SignedLineGraph slg;
  slg.back_map = std::move(lg.back_map);
  slg.orientation = o;
  slg.signs.reserve(lg.graph.edge_count());
  for (const auto& [i, j] : lg.graph.edges()) {
    const int s = shared_vertex(slg.back_map[i], slg.back_map[j]);
    const bool head_i = o.head(i) == s;
    const bool head_j = o.head(j) == s;
    slg.signs.push_back(head_i == head_j ? 1 : -1);
  }
  slg.base = std::move(lg.graph);
  return slg;
}

Matrix SignedLineGraph::signed_adjacency() const {
  Matrix m(base.vertex_count());
  for (int e = 0; e < base.edge_count(); ++e) {
    const auto [i, j] = base.edges()[e];
    m(i, j) = signs[e];
    m(j, i) = signs[e];
  }
  return m;
}

SignedLineGraph switch_edge(SignedLineGraph slg, int layout_edge) {
  if (layout_edge < 0 || layout_edge >= slg.base.vertex_count()) {
    throw std::invalid_argument("switch_edge: unknown layout edge id " +
                                std::to_string(layout_edge));
  }
  auto& [foot, head] = slg.orientation.foot_head[layout_edge];
  std::swap(foot, head);
  for (int e : slg.base.incident_edges(layout_edge)) slg.signs[e] = -slg.signs[e];
  return slg;
}

SignedLineGraph switch_edge(SignedLineGraph slg, Edge layout_edge) {
  if (layout_edge.first > layout_edge.second) std::swap(layout_edge.first, layout_edge.second);
  const auto it = std::lower_bound(slg.back_map.begin(), slg.back_map.end(), layout_edge);
  if (it == slg.back_map.end() || *it != layout_edge) {
    throw std::invalid_argument("switch_edge: unknown layout edge");
  }
  const int index = static_cast<int>(it - slg.back_map.begin());
  return switch_edge(std::move(slg), index);
}

}  // namespace hyperlat
