#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperlat/eig.hpp"
#include "hyperlat/linegraph.hpp"
#include "hyperlat/spectra.hpp"
#include "hyperlat/tiling.hpp"
#include "test_helpers.hpp"

using namespace hyperlat;
using namespace testutil;

TEST_SUITE_BEGIN("linegraph");

TEST_CASE("line graph of a cycle is a cycle") {
  const auto lg = line_graph(cycle_graph(4));
  CHECK(lg.graph.vertex_count() == 4);
  CHECK(lg.graph.edge_count() == 4);
  CHECK(lg.graph.min_degree() == 2);
  CHECK(lg.graph.max_degree() == 2);
  CHECK(lg.graph.is_connected());
}

TEST_CASE("line graph of the dodecahedron is 4-regular on 30 vertices") {
  const auto lg = line_graph(catalog_instance("dodecahedron").graph);
  CHECK(lg.graph.vertex_count() == 30);
  CHECK(lg.graph.min_degree() == 4);
  CHECK(lg.graph.max_degree() == 4);
}

TEST_CASE("line-graph vertex degree is deg(u) + deg(v) - 2") {
  const auto layout = generate_layout(SchlafliSpec(5, 4), 2);
  const auto lg = line_graph(layout.graph);
  for (int k = 0; k < lg.graph.vertex_count(); ++k) {
    const auto [u, v] = lg.back_map[k];
    CHECK(lg.graph.degree(k) == layout.graph.degree(u) + layout.graph.degree(v) - 2);
  }
}

TEST_CASE("line graph of an edgeless graph is rejected") {
  CHECK_THROWS_AS(line_graph(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("default orientation is foot=min, head=max and deterministic") {
  const Graph g(8, {{3, 7}, {0, 1}});
  const auto o = default_orientation(g);
  CHECK(o.foot(0) == 0);
  CHECK(o.head(0) == 1);
  CHECK(o.foot(1) == 3);
  CHECK(o.head(1) == 7);
  const auto o2 = default_orientation(g);
  CHECK(o.foot_head == o2.foot_head);
}

TEST_CASE("sign rule on a two-edge path") {
  const Graph path(3, {{0, 1}, {1, 2}});
  // Both edges oriented away from the ends: shared vertex 1 is head of
  // edge 0 and foot of edge 1 -> -1.
  Orientation o;
  o.foot_head = {{0, 1}, {1, 2}};
  auto slg = signed_line_graph(path, o);
  REQUIRE(slg.base.edge_count() == 1);
  CHECK(slg.signs[0] == -1);

  // Reverse the second edge: vertex 1 is head of both -> +1.
  o.foot_head = {{0, 1}, {2, 1}};
  slg = signed_line_graph(path, o);
  CHECK(slg.signs[0] == 1);
}

TEST_CASE("orientation must cover and match the layout edges") {
  const Graph path(3, {{0, 1}, {1, 2}});
  Orientation bad;
  bad.foot_head = {{0, 1}};
  CHECK_THROWS_AS(signed_line_graph(path, bad), std::invalid_argument);
  bad.foot_head = {{0, 1}, {0, 2}};
  CHECK_THROWS_AS(signed_line_graph(path, bad), std::invalid_argument);
}

TEST_CASE("signed entries have the unsigned line graph as absolute value") {
  const auto layout = generate_layout(SchlafliSpec(5, 4), 2);
  const auto lg = line_graph(layout.graph);
  const Matrix a = adjacency_matrix(lg.graph);
  for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const auto slg = signed_line_graph(layout.graph, random_orientation(layout.graph, seed));
    const Matrix s = slg.signed_adjacency();
    for (int i = 0; i < a.size(); ++i) {
      for (int j = 0; j < a.size(); ++j) {
        CHECK(std::abs(s(i, j)) == a(i, j));
      }
    }
  }
}

TEST_CASE("switching an edge twice restores the sign pattern") {
  const auto layout = generate_layout(SchlafliSpec(5, 4), 2);
  const auto slg = signed_line_graph(layout.graph, default_orientation(layout.graph));
  auto once = switch_edge(slg, 7);
  CHECK(once.signs != slg.signs);
  const auto twice = switch_edge(std::move(once), 7);
  CHECK(twice.signs == slg.signs);
  CHECK(twice.orientation.foot_head == slg.orientation.foot_head);

  CHECK_THROWS_AS(switch_edge(slg, Edge{0, 19}), std::invalid_argument);
}

TEST_CASE("switching preserves the half-wave spectrum") {
  const auto layout = generate_layout(SchlafliSpec(5, 4), 2);
  auto slg = signed_line_graph(layout.graph, default_orientation(layout.graph));
  const auto reference = symmetric_eigenvalues(slg.signed_adjacency());
  std::mt19937_64 rng(41);
  for (int k = 0; k < 20; ++k) {
    slg = switch_edge(std::move(slg), static_cast<int>(rng() % layout.graph.edge_count()));
    CHECK(multiset_deviation(symmetric_eigenvalues(slg.signed_adjacency()), reference) <= 1e-9);
  }
}

TEST_CASE("bipartite layouts have gauge-equivalent full and half spectra") {
  for (const auto& spec : {SchlafliSpec(4, 4), SchlafliSpec(6, 4)}) {
    const auto layout = generate_layout(spec, 2);
    REQUIRE(is_bipartite(layout.graph));
    const auto full = symmetric_eigenvalues(adjacency_matrix(line_graph(layout.graph).graph));
    const auto half = symmetric_eigenvalues(
        signed_line_graph(layout.graph, default_orientation(layout.graph)).signed_adjacency());
    CHECK(multiset_deviation(full, half) <= 1e-8);
  }
  // Non-bipartite layouts split.
  for (const auto& layout :
       {generate_layout(SchlafliSpec(5, 4), 2), catalog_instance("dodecahedron")}) {
    REQUIRE_FALSE(is_bipartite(layout.graph));
    const auto full = symmetric_eigenvalues(adjacency_matrix(line_graph(layout.graph).graph));
    const auto half = symmetric_eigenvalues(
        signed_line_graph(layout.graph, default_orientation(layout.graph)).signed_adjacency());
    CHECK(multiset_deviation(full, half) > 1e-3);
  }
}

TEST_SUITE_END();
