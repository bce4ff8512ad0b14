#pragma once

#include <string>
#include <vector>

#include "hyperlat/graph.hpp"
#include "hyperlat/types.hpp"

namespace hyperlat {

// Per-ring vertex counts of a polygon-centered layout. counts[j-1] holds
// (b_j, B_j); the series extends one ring past the layout because B_{l+1}
// feeds the count formulas.
struct RingCounts {
  SchlafliSpec spec;
  std::vector<std::pair<long long, long long>> per_ring;  // j = 1..rings+1

  int rings() const { return static_cast<int>(per_ring.size()) - 1; }
  long long b(int j) const { return per_ring[j - 1].first; }   // 1-based
  long long B(int j) const { return per_ring[j - 1].second; }  // 1-based
};

RingCounts ring_counts(const SchlafliSpec& spec, int rings);

// A {p,q} layout graph with ring/type annotations. Generated layouts carry
// rings >= 1, ring_of values in 1..rings and type_of in {'b','B'}; catalog
// instances use rings = 0, ring_of = 0 and type_of = '-'.
struct LayoutGraph {
  Graph graph;
  SchlafliSpec spec;
  int rings = 0;
  std::vector<int> ring_of;
  std::vector<char> type_of;
  // Polygon boundaries as vertex cycles, in construction order. Derived
  // data, not part of the JSON schema.
  std::vector<std::vector<int>> faces;
};

// Grows `rings` concentric rings around a seed p-gon by sweeping the
// frontier anticlockwise and attaching p-gons until every interior vertex
// has degree q. Vertex ids are ring-major and anticlockwise within a ring.
LayoutGraph generate_layout(const SchlafliSpec& spec, int rings);

// Finite spherical layouts. Known names: "dodecahedron".
LayoutGraph catalog_instance(const std::string& name);

}  // namespace hyperlat
