#pragma once

#include <cstddef>
#include <vector>

namespace hyperlat {

// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  static Matrix identity(int n);

  int size() const { return n_; }

  double& operator()(int i, int j) { return a_[idx(i, j)]; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  double* row(int i) { return a_.data() + idx(i, 0); }
  const double* row(int i) const { return a_.data() + idx(i, 0); }

  bool is_symmetric(double rel_tol = 1e-12) const;
  double max_abs() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> a_;
};

std::vector<double> multiply(const Matrix& m, const std::vector<double>& x);

}  // namespace hyperlat
