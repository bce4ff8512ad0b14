#pragma once

#include <vector>

#include "hyperlat/linegraph.hpp"
#include "hyperlat/matrix.hpp"
#include "hyperlat/spectra.hpp"

namespace hyperlat {

// An eigenvector of a coupling matrix at eigenvalue -2, indexed by
// line-graph vertex.
struct FlatState {
  enum class Source { NullSpace, EvenCycle };

  std::vector<double> vector;
  Source source = Source::NullSpace;
  std::vector<int> cycle;  // layout vertices, when source == EvenCycle
};

// Orthonormal basis of the eigenspace at -2 (|lambda + 2| <= flat_tol),
// re-orthonormalized; each vector satisfies ||(M + 2I)v||_inf <= 1e-8.
std::vector<FlatState> flat_band_basis(const Matrix& coupling, double flat_tol = kDefaultFlatTol);

// Alternating +-1 vector on the line-graph vertices of a simple even layout
// cycle, zero elsewhere. An exact integer eigenvector of the line-graph
// adjacency at -2: the two cycle edges at each visited layout vertex carry
// opposite signs, so contributions through that vertex cancel.
FlatState even_cycle_state(const Graph& layout, const std::vector<int>& cycle,
                           const LineGraphResult& lg);

struct EvenCycleStates {
  std::vector<FlatState> states;  // linearly independent subset
  int rank = 0;
  int target_rank = 0;  // flat-band multiplicity of the full-wave matrix
  bool complete = true;  // false if the search budget ran out first
};

// Enumerates simple even cycles by bounded DFS (canonical root/direction,
// length capped at max_cycle_length; 0 means 2*girth + 4) and keeps a
// maximal linearly independent set of their states. Stops early once the
// rank reaches the flat-band multiplicity. Requires n <= 200.
EvenCycleStates independent_even_cycle_states(const Graph& layout, const LineGraphResult& lg,
                                              int max_cycle_length = 0);

}  // namespace hyperlat
