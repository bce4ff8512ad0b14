#pragma once

#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]
};

// Production path: Householder reduction to tridiagonal form followed by
// implicit-shift QL iteration. The O(n^3) stages (reduction, transform
// accumulation, rotation application) run OpenMP-parallel. Ascending order.
std::vector<double> symmetric_eigenvalues(Matrix a);
EigenDecomposition symmetric_eigendecomposition(Matrix a);

// Serial reference: cyclic Jacobi. Much slower, but an entirely independent
// code path; kept for cross-checking in tests and for the benchmark.
std::vector<double> symmetric_eigenvalues_ref(Matrix a);
EigenDecomposition symmetric_eigendecomposition_ref(Matrix a);

}  // namespace hyperlat
