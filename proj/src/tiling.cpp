#include "hyperlat/tiling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperlat/growth.hpp"

namespace hyperlat {

RingCounts ring_counts(const SchlafliSpec& spec, int rings) {
  return {spec, ring_series(spec, rings)};
}

namespace {

// Incremental builder so the construction below stays readable.
struct Builder {
  SchlafliSpec spec;
  std::vector<Edge> edges;
  std::vector<int> ring_of;
  std::vector<char> type_of;
  std::vector<std::vector<int>> faces;

  int add_vertex(int ring, char type) {
    ring_of.push_back(ring);
    type_of.push_back(type);
    return static_cast<int>(ring_of.size()) - 1;
  }
  void add_edge(int u, int v) { edges.emplace_back(u, v); }
};

// Grows one annulus of p-gons around the current frontier ring. Every
// frontier vertex v still needs cap(v) polygons above it: q-1 for b-type
// (one polygon below), q-2 for B-type (two below). Consecutive polygons
// around v share a radial edge from v up to a new B vertex, so v gets
// cap(v)-1 radial edges; the first/last polygon of v sits on a frontier
// edge and is shared with the neighbouring vertex. A polygon on a frontier
// edge closes with p-e-3 new b vertices, where e counts the frontier edges
// it spans (e > 1 only for q = 3, where B vertices carry no radial edges
// and get absorbed into the neighbouring polygon); a corner polygon closes
// with p-3.
std::vector<int> grow_annulus(Builder& bld, const std::vector<int>& frontier, int ring) {
  const int p = bld.spec.p;
  const int q = bld.spec.q;
  const int k = static_cast<int>(frontier.size());

  std::vector<int> radial(k);
  std::vector<int> bearing;  // frontier positions with at least one radial edge
  for (int i = 0; i < k; ++i) {
    const int cap = bld.type_of[frontier[i]] == 'b' ? q - 1 : q - 2;
    radial[i] = cap - 1;
    if (radial[i] > 0) bearing.push_back(i);
  }
  if (bearing.empty()) throw std::logic_error("grow_annulus: frontier has no radial capacity");

  std::vector<int> new_ring;
  const int S = static_cast<int>(bearing.size());

  // Pending polygon over one or more frontier edges, closed once the next
  // radial vertex exists.
  std::vector<int> pend_lower;  // frontier path
  int pend_w = -1;              // last radial vertex of the path's start
  std::vector<int> pend_chain;  // b vertices created after pend_w
  bool have_pend = false;

  auto chain_b_vertices = [&](int count) {
    std::vector<int> chain;
    chain.reserve(count);
    for (int c = 0; c < count; ++c) {
      const int x = bld.add_vertex(ring, 'b');
      if (!new_ring.empty()) bld.add_edge(new_ring.back(), x);
      new_ring.push_back(x);
      chain.push_back(x);
    }
    return chain;
  };

  for (int s = 0; s < S; ++s) {
    const int idx = bearing[s];
    const int v = frontier[idx];
    int prev_w = -1;
    std::vector<int> corner_chain;
    for (int t = 0; t < radial[idx]; ++t) {
      const int w = bld.add_vertex(ring, 'B');
      bld.add_edge(v, w);
      if (!new_ring.empty()) bld.add_edge(new_ring.back(), w);
      new_ring.push_back(w);

      if (t == 0) {
        if (have_pend) {
          std::vector<int> face = pend_lower;
          face.push_back(w);
          face.insert(face.end(), pend_chain.rbegin(), pend_chain.rend());
          face.push_back(pend_w);
          bld.faces.push_back(std::move(face));
          have_pend = false;
        }
        // s == 0, t == 0: the wrap-around polygon closes at the very end.
      } else {
        std::vector<int> face{v, prev_w};
        face.insert(face.end(), corner_chain.begin(), corner_chain.end());
        face.push_back(w);
        bld.faces.push_back(std::move(face));
      }
      prev_w = w;
      if (t < radial[idx] - 1) corner_chain = chain_b_vertices(p - 3);
    }

    // Frontier path to the next radial-bearing vertex (cyclic).
    const int next = bearing[(s + 1) % S];
    const int span = (next - idx + k) % k == 0 ? k : (next - idx + k) % k;
    if (p - span - 3 < 0) throw std::logic_error("grow_annulus: polygon cannot close");
    pend_lower.clear();
    for (int step = 0; step <= span; ++step) pend_lower.push_back(frontier[(idx + step) % k]);
    pend_w = prev_w;
    pend_chain = chain_b_vertices(p - span - 3);
    have_pend = true;
  }

  // Wrap-around polygon: closes with the first radial vertex created.
  std::vector<int> face = pend_lower;
  face.push_back(new_ring.front());
  face.insert(face.end(), pend_chain.rbegin(), pend_chain.rend());
  face.push_back(pend_w);
  bld.faces.push_back(std::move(face));

  bld.add_edge(new_ring.back(), new_ring.front());
  return new_ring;
}

}  // namespace

LayoutGraph generate_layout(const SchlafliSpec& spec, int rings) {
  ring_counts(spec, rings);  // validates the domain

  Builder bld;
  bld.spec = spec;

  std::vector<int> frontier;
  for (int i = 0; i < spec.p; ++i) {
    frontier.push_back(bld.add_vertex(1, 'b'));
    if (i > 0) bld.add_edge(i - 1, i);
  }
  bld.add_edge(spec.p - 1, 0);
  bld.faces.push_back(frontier);

  for (int ring = 2; ring <= rings; ++ring) {
    frontier = grow_annulus(bld, frontier, ring);
  }

  LayoutGraph layout;
  layout.spec = spec;
  layout.rings = rings;
  layout.graph = Graph(static_cast<int>(bld.ring_of.size()), std::move(bld.edges));
  layout.ring_of = std::move(bld.ring_of);
  layout.type_of = std::move(bld.type_of);
  layout.faces = std::move(bld.faces);
  return layout;
}

LayoutGraph catalog_instance(const std::string& name) {
  if (name != "dodecahedron") {
    throw std::invalid_argument("catalog_instance: unknown name '" + name + "'");
  }
  // Generalized Petersen graph GP(10,2): outer cycle u_0..u_9, inner
  // vertices v_i = 10 + i with chords v_i - v_{i+2}.
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }

  LayoutGraph layout;
  layout.spec = SchlafliSpec(5, 3);
  layout.rings = 0;
  layout.graph = Graph(20, std::move(edges));
  layout.ring_of.assign(20, 0);
  layout.type_of.assign(20, '-');

  // Twelve pentagonal faces: ten mixed ones plus the two inner 5-cycles.
  for (int i = 0; i < 10; ++i) {
    const int prev = (i + 9) % 10;
    const int next = (i + 1) % 10;
    layout.faces.push_back({prev, i, next, 10 + next, 10 + prev});
  }
  layout.faces.push_back({10, 12, 14, 16, 18});
  layout.faces.push_back({11, 13, 15, 17, 19});
  return layout;
}

}  // namespace hyperlat
