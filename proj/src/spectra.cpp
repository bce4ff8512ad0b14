#include "hyperlat/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperlat/eig.hpp"

namespace hyperlat {

int SpectrumMultiset::dimension() const {
  int d = 0;
  for (const auto& e : entries) d += e.multiplicity;
  return d;
}

double SpectrumMultiset::min_value() const {
  if (entries.empty()) throw std::invalid_argument("SpectrumMultiset: empty");
  return entries.front().value;
}

double SpectrumMultiset::max_value() const {
  if (entries.empty()) throw std::invalid_argument("SpectrumMultiset: empty");
  return entries.back().value;
}

std::vector<double> SpectrumMultiset::expanded() const {
  std::vector<double> out;
  out.reserve(dimension());
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

SpectrumMultiset cluster_eigenvalues(std::vector<double> values, double cluster_tol) {
  if (cluster_tol <= 0.0) throw std::invalid_argument("cluster_eigenvalues: tolerance must be > 0");
  std::sort(values.begin(), values.end());
  SpectrumMultiset s;
  s.cluster_tol = cluster_tol;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= cluster_tol) {
      sum += values[j];
      ++j;
    }
    s.entries.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return s;
}

SpectrumMultiset eigen_spectrum(const Matrix& m, double cluster_tol, int dim_cap) {
  if (m.size() > dim_cap) {
    throw ResourceLimitError("eigen_spectrum: dimension " + std::to_string(m.size()) +
                             " exceeds cap " + std::to_string(dim_cap));
  }
  if (!m.is_symmetric()) throw std::invalid_argument("eigen_spectrum: matrix is not symmetric");
  return cluster_eigenvalues(symmetric_eigenvalues(m), cluster_tol);
}

double multiset_deviation(std::vector<double> lhs, std::vector<double> rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  double dev = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) dev = std::max(dev, std::abs(lhs[i] - rhs[i]));
  return dev;
}

IdentityReport check_shift_identity(std::vector<double> coupling_eigs,
                                    std::vector<double> layout_eigs, int m, int n, double tol) {
  IdentityReport rep;
  rep.tolerance = tol;
  rep.line_graph_dimension = m;
  rep.layout_dimension = n;
  if (static_cast<int>(coupling_eigs.size()) != m || static_cast<int>(layout_eigs.size()) != n ||
      m < n) {
    rep.pass = false;
    rep.max_deviation = std::numeric_limits<double>::infinity();
    rep.detail = "dimension mismatch";
    return rep;
  }
  std::vector<double> rhs;
  rhs.reserve(m);
  for (double mu : layout_eigs) rhs.push_back(mu - 2.0);
  rhs.insert(rhs.end(), m - n, -2.0);
  rep.max_deviation = multiset_deviation(std::move(coupling_eigs), std::move(rhs));
  rep.pass = rep.max_deviation <= tol;
  if (!rep.pass) rep.detail = "eigenvalue multisets differ beyond tolerance";
  return rep;
}

namespace {

void require_identity_preconditions(const LayoutGraph& layout) {
  if (!layout.graph.is_connected()) {
    throw std::invalid_argument("identity check requires a connected layout");
  }
  if (layout.graph.edge_count() < layout.graph.vertex_count()) {
    throw std::invalid_argument("identity check requires m >= n");
  }
}

}  // namespace

IdentityReport verify_identity_full(const LayoutGraph& layout, double tol) {
  require_identity_preconditions(layout);
  const auto lg = line_graph(layout.graph);
  auto lhs = symmetric_eigenvalues(adjacency_matrix(lg.graph));
  auto rhs = symmetric_eigenvalues(signless_laplacian(layout.graph));
  auto rep = check_shift_identity(std::move(lhs), std::move(rhs), layout.graph.edge_count(),
                                  layout.graph.vertex_count(), tol);
  if (!rep.pass && rep.detail.empty()) rep.detail = "full-wave identity violated";
  return rep;
}

IdentityReport verify_identity_half(const LayoutGraph& layout, const Orientation& o, double tol) {
  require_identity_preconditions(layout);
  const auto slg = signed_line_graph(layout.graph, o);
  auto lhs = symmetric_eigenvalues(slg.signed_adjacency());
  auto rhs = symmetric_eigenvalues(laplacian(layout.graph));
  auto rep = check_shift_identity(std::move(lhs), std::move(rhs), layout.graph.edge_count(),
                                  layout.graph.vertex_count(), tol);
  if (!rep.pass && rep.detail.empty()) rep.detail = "half-wave identity violated";
  return rep;
}

int flat_band_multiplicity(const SpectrumMultiset& s, double flat_tol) {
  int count = 0;
  for (const auto& e : s.entries) {
    if (std::abs(e.value + 2.0) <= flat_tol) count += e.multiplicity;
  }
  return count;
}

BoundsReport check_bounds(const LayoutGraph& layout, const SpectrumMultiset& full,
                          const SpectrumMultiset& half, double tol) {
  BoundsReport rep;
  rep.q = layout.spec.q;
  rep.k_min = layout.graph.min_degree();
  rep.k_max = layout.graph.max_degree();
  if (rep.k_min < 2) throw std::invalid_argument("check_bounds: requires minimum degree >= 2");

  rep.max_full = full.max_value();
  rep.max_half = half.max_value();
  rep.full_lower = 2.0 * rep.k_min - 2.0;
  rep.full_upper = 2.0 * rep.k_max - 2.0;
  rep.half_lower = static_cast<double>(rep.k_max) - 2.0;
  rep.half_upper = 2.0 * rep.k_max - 2.0;

  rep.pass = rep.max_full >= rep.full_lower - tol && rep.max_full <= rep.full_upper + tol &&
             rep.max_half >= rep.half_lower - tol && rep.max_half <= rep.half_upper + tol;
  if (!rep.pass) rep.detail = "largest-eigenvalue bounds violated";
  return rep;
}

SpectrumMultiset hamiltonian_spectrum(const SpectrumMultiset& s, const HamiltonianParams& params) {
  if (params.t <= 0.0) throw std::invalid_argument("hamiltonian_spectrum: t must be > 0");
  SpectrumMultiset out;
  out.cluster_tol = s.cluster_tol * params.t;
  out.entries.reserve(s.entries.size());
  // lambda -> omega0 - t*lambda reverses the order.
  for (auto it = s.entries.rbegin(); it != s.entries.rend(); ++it) {
    out.entries.push_back({params.omega0 - params.t * it->value, it->multiplicity});
  }
  return out;
}

double spectral_gap_above_flat(const SpectrumMultiset& s, double flat_tol) {
  for (const auto& e : s.entries) {
    if (e.value > -2.0 + flat_tol) return e.value + 2.0;
  }
  throw std::invalid_argument("spectral_gap_above_flat: no states above the flat band");
}

}  // namespace hyperlat
