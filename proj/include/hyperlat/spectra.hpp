#pragma once

#include <string>
#include <vector>

#include "hyperlat/linegraph.hpp"
#include "hyperlat/matrix.hpp"
#include "hyperlat/tiling.hpp"

namespace hyperlat {

// Absolute tolerances: cluster_tol separates numerically distinct
// eigenvalues, flat_tol decides membership in the flat band at -2. Defaults
// are sized for matrices with entries in {0,+-1} up to n ~ 6000.
inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kDefaultFlatTol = 1e-6;
inline constexpr int kDefaultEigenDimCap = 6000;

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 0;
};

struct SpectrumMultiset {
  std::vector<SpectrumEntry> entries;  // strictly ascending values
  double cluster_tol = kDefaultClusterTol;

  int dimension() const;
  double min_value() const;
  double max_value() const;
  std::vector<double> expanded() const;  // values repeated by multiplicity
};

// Groups an ascending list: a new cluster starts whenever the gap to the
// previous value exceeds cluster_tol; each cluster reports its mean.
SpectrumMultiset cluster_eigenvalues(std::vector<double> values, double cluster_tol);

SpectrumMultiset eigen_spectrum(const Matrix& m, double cluster_tol = kDefaultClusterTol,
                                int dim_cap = kDefaultEigenDimCap);

// max_i |lhs_i - rhs_i| over the two sorted lists; +inf on size mismatch.
double multiset_deviation(std::vector<double> lhs, std::vector<double> rhs);

struct IdentityReport {
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int line_graph_dimension = 0;  // m
  int layout_dimension = 0;      // n
  std::string detail;
};

// Checks spec(coupling matrix) == {mu - 2 : mu in spec(layout matrix)}
// together with (m - n) extra eigenvalues at exactly -2, given the two
// independently computed eigenvalue lists.
IdentityReport check_shift_identity(std::vector<double> coupling_eigs,
                                    std::vector<double> layout_eigs, int m, int n,
                                    double tol = kDefaultClusterTol);

// Full-wave identity: line-graph adjacency vs signless Laplacian D + A.
IdentityReport verify_identity_full(const LayoutGraph& layout, double tol = kDefaultClusterTol);
// Half-wave identity: signed line-graph adjacency vs Laplacian D - A.
IdentityReport verify_identity_half(const LayoutGraph& layout, const Orientation& o,
                                    double tol = kDefaultClusterTol);

// Number of eigenvalues within flat_tol of -2. For a connected layout this
// is m-n for the full-wave matrix of a non-bipartite layout, and m-n+1 for
// bipartite full-wave and for the half-wave matrix always.
int flat_band_multiplicity(const SpectrumMultiset& s, double flat_tol = kDefaultFlatTol);

struct BoundsReport {
  bool pass = false;
  int k_min = 0, k_max = 0, q = 0;
  double max_full = 0.0, max_half = 0.0;
  double full_lower = 0.0, full_upper = 0.0;
  double half_lower = 0.0, half_upper = 0.0;
  std::string detail;
};

// Largest-eigenvalue bounds from the layout's extreme degrees:
//   2 k_min - 2 <= max S(full) <= 2 k_max - 2
//   k_max - 2   <= max S(half) <= 2 k_max - 2.
// For ring layouts with an interior vertex (k_max = q, k_min = 2) these are
// exactly 2 <= max S(full) <= 2(q-1) and q-2 <= max S(half) <= 2(q-1).
BoundsReport check_bounds(const LayoutGraph& layout, const SpectrumMultiset& full,
                          const SpectrumMultiset& half, double tol = 1e-9);

enum class CouplingMode { FullWave, HalfWave };

struct HamiltonianParams {
  double omega0 = 0.0;
  double t = 1.0;  // must be > 0
  CouplingMode mode = CouplingMode::FullWave;
};

// Physical spectrum: each coupling eigenvalue lambda maps to omega0 - t*lambda.
SpectrumMultiset hamiltonian_spectrum(const SpectrumMultiset& s, const HamiltonianParams& params);

// Distance from -2 to the smallest eigenvalue above the flat band.
double spectral_gap_above_flat(const SpectrumMultiset& s, double flat_tol = kDefaultFlatTol);

}  // namespace hyperlat
