#include "hyperlat/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlat {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::is_symmetric(double rel_tol) const {
  const double tol = rel_tol * std::max(1.0, max_abs());
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> multiply(const Matrix& m, const std::vector<double>& x) {
  const int n = m.size();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* row = m.row(i);
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace hyperlat
