#include "hyperlat/flatband.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hyperlat/eig.hpp"

namespace hyperlat {

namespace {

double residual_inf(const Matrix& coupling, const std::vector<double>& v) {
  const int n = coupling.size();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* row = coupling.row(i);
    double s = 2.0 * v[i];
    for (int j = 0; j < n; ++j) s += row[j] * v[j];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace

std::vector<FlatState> flat_band_basis(const Matrix& coupling, double flat_tol) {
  const auto eig = symmetric_eigendecomposition(coupling);
  const int n = coupling.size();

  std::vector<std::vector<double>> basis;
  for (int k = 0; k < n; ++k) {
    if (std::abs(eig.eigenvalues[k] + 2.0) > flat_tol) continue;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = eig.eigenvectors(i, k);
    // Modified Gram-Schmidt against the states already kept.
    for (const auto& u : basis) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += u[i] * v[i];
      for (int i = 0; i < n; ++i) v[i] -= dot * u[i];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }

  std::vector<FlatState> states;
  states.reserve(basis.size());
  for (auto& v : basis) {
    if (residual_inf(coupling, v) > 1e-8) {
      throw std::logic_error("flat_band_basis: state fails the residual bound");
    }
    states.push_back({std::move(v), FlatState::Source::NullSpace, {}});
  }
  return states;
}

FlatState even_cycle_state(const Graph& layout, const std::vector<int>& cycle,
                           const LineGraphResult& lg) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4 || len % 2 != 0) {
    throw std::invalid_argument("even_cycle_state: cycle length must be even and >= 4");
  }
  std::vector<char> seen(layout.vertex_count(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= layout.vertex_count() || seen[v]) {
      throw std::invalid_argument("even_cycle_state: not a simple cycle");
    }
    seen[v] = 1;
  }

  std::vector<double> vec(lg.graph.vertex_count(), 0.0);
  for (int i = 0; i < len; ++i) {
    const int u = cycle[i];
    const int w = cycle[(i + 1) % len];
    const int e = layout.edge_index(u, w);
    if (e < 0) throw std::invalid_argument("even_cycle_state: consecutive vertices not adjacent");
    vec[e] = i % 2 == 0 ? 1.0 : -1.0;
  }

  // Integer check: (A + 2I) v = 0 exactly.
  for (int i = 0; i < lg.graph.vertex_count(); ++i) {
    std::int64_t s = 2 * static_cast<std::int64_t>(vec[i]);
    for (int j : lg.graph.neighbors(i)) s += static_cast<std::int64_t>(vec[j]);
    if (s != 0) throw std::logic_error("even_cycle_state: exact eigenvector check failed");
  }

  return {std::move(vec), FlatState::Source::EvenCycle, cycle};
}

namespace {

// Incremental rank tracking by Gaussian elimination; inputs are integer
// vectors, so the pivot threshold is far below any genuine entry.
class RankTracker {
 public:
  explicit RankTracker(int dim) : dim_(dim) {}

  bool try_add(const std::vector<double>& v) {
    std::vector<double> w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const double factor = w[pivots_[r]];
      if (factor == 0.0) continue;
      for (int i = 0; i < dim_; ++i) w[i] -= factor * rows_[r][i];
    }
    int pivot = -1;
    double best = 1e-10;
    for (int i = 0; i < dim_; ++i) {
      if (std::abs(w[i]) > best) {
        best = std::abs(w[i]);
        pivot = i;
      }
    }
    if (pivot < 0) return false;
    for (int i = 0; i < dim_; ++i) w[i] /= w[pivot];
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::vector<double>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

EvenCycleStates independent_even_cycle_states(const Graph& layout, const LineGraphResult& lg,
                                              int max_cycle_length) {
  const int n = layout.vertex_count();
  if (n > 200) {
    throw std::invalid_argument("independent_even_cycle_states: layout too large (n > 200)");
  }
  if (max_cycle_length <= 0) {
    const int g = girth(layout);
    if (g == 0) throw std::invalid_argument("independent_even_cycle_states: acyclic layout");
    max_cycle_length = 2 * g + 4;
  }

  EvenCycleStates result;
  const auto coloring = bipartite_coloring(layout);
  const int m = layout.edge_count();
  result.target_rank = m - n + (coloring.has_value() ? 1 : 0);

  RankTracker tracker(lg.graph.vertex_count());
  std::int64_t budget = 50'000'000;  // DFS step budget

  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  // Canonical enumeration: the root is the smallest vertex of the cycle and
  // the second vertex is smaller than the last, so each cycle shows up once.
  auto handle_cycle = [&](const std::vector<int>& cycle) {
    if (cycle.size() % 2 != 0) return false;
    if (cycle[1] > cycle.back()) return false;
    const FlatState state = even_cycle_state(layout, cycle, lg);
    if (tracker.try_add(state.vector)) {
      result.states.push_back(state);
      result.rank = tracker.rank();
    }
    return result.rank >= result.target_rank;
  };

  for (int root = 0; root < n && result.rank < result.target_rank; ++root) {
    path.assign(1, root);
    on_path.assign(n, 0);
    on_path[root] = 1;

    // Iterative DFS over neighbor indices.
    std::vector<std::size_t> next_idx{0};
    while (!next_idx.empty()) {
      if (--budget <= 0) {
        result.complete = false;
        return result;
      }
      const int v = path.back();
      const auto& nbrs = layout.neighbors(v);
      if (next_idx.back() >= nbrs.size()) {
        next_idx.pop_back();
        on_path[v] = 0;
        path.pop_back();
        continue;
      }
      const int w = nbrs[next_idx.back()++];
      if (w == root && path.size() >= 4) {
        if (handle_cycle(path)) return result;
        continue;
      }
      if (w <= root || on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_cycle_length) continue;
      path.push_back(w);
      on_path[w] = 1;
      next_idx.push_back(0);
    }
  }
  return result;
}

}  // namespace hyperlat
