#include "hyperlat/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperlat {

namespace {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Below this many rows the fork/join overhead outweighs the work.
constexpr int kParallelRows = 768;

// Splits rows [0, rows) into `parts` contiguous chunks of roughly equal
// triangle area (row j costs ~j), so threads working on the lower triangle
// stay balanced. Returns parts+1 boundaries.
std::vector<int> triangle_partition(int rows, int parts) {
  std::vector<int> bounds(parts + 1, rows);
  bounds[0] = 0;
  const double total = static_cast<double>(rows) * rows;
  for (int t = 1; t < parts; ++t) {
    bounds[t] = static_cast<int>(std::sqrt(total * t / parts));
    bounds[t] = std::clamp(bounds[t], bounds[t - 1], rows);
  }
  return bounds;
}

// ---------------------------------------------------------------------------
// Householder reduction to symmetric tridiagonal form, operating on the
// lower triangle in place. On exit d holds the diagonal and e[i] the
// coupling between i-1 and i (e[0] = 0). With `accumulate`, a is replaced
// by the orthogonal matrix Z with Z^T A Z tridiagonal.
//
// All passes stream the lower triangle row-major; the reflected mat-vec
// uses per-thread scatter buffers instead of strided column reads.
// ---------------------------------------------------------------------------
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e, bool accumulate) {
  const int n = a.size();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  if (n == 0) return;

  const int nt = thread_count();
  std::vector<double> scatter(static_cast<std::size_t>(nt) * n, 0.0);

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      double* ri = a.row(i);
      for (int k = 0; k <= l; ++k) scale += std::abs(ri[k]);
      if (scale == 0.0) {
        e[i] = ri[l];
      } else {
        for (int k = 0; k <= l; ++k) {
          ri[k] /= scale;
          h += ri[k] * ri[k];
        }
        double f = ri[l];
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        ri[l] = f - g;

        // e[0..l] <- (A_sub * u) / h with u = ri[0..l]. Each thread scatters
        // into its own buffer; the buffers are reduced in thread order, so
        // results are reproducible for a fixed thread count.
        const int rows = l + 1;
        std::fill(scatter.begin(), scatter.begin() + static_cast<std::size_t>(nt) * rows, 0.0);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt) if (rows >= kParallelRows)
#endif
        {
#ifdef _OPENMP
          const int team = omp_get_num_threads();
          const int tid = omp_get_thread_num();
#else
          const int team = 1;
          const int tid = 0;
#endif
          const auto bounds = triangle_partition(rows, team);
          double* acc = scatter.data() + static_cast<std::size_t>(tid) * rows;
          for (int j = bounds[tid]; j < bounds[tid + 1]; ++j) {
            const double* rj = a.row(j);
            const double uj = ri[j];
            double dot = 0.0;
            for (int k = 0; k < j; ++k) {
              dot += rj[k] * ri[k];
              acc[k] += rj[k] * uj;
            }
            acc[j] += dot + rj[j] * uj;
          }
        }
        for (int j = 0; j <= l; ++j) {
          double s = scatter[j];
          for (int t = 1; t < nt; ++t) s += scatter[static_cast<std::size_t>(t) * rows + j];
          e[j] = s / h;
        }

        if (accumulate) {
          for (int j = 0; j <= l; ++j) a(j, i) = ri[j] / h;
        }

        f = 0.0;
        for (int j = 0; j <= l; ++j) f += e[j] * ri[j];
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) e[j] -= hh * ri[j];

        // Rank-2 update of the lower triangle: A -= q u^T + u q^T.
#ifdef _OPENMP
#pragma omp parallel num_threads(nt) if (rows >= kParallelRows)
#endif
        {
#ifdef _OPENMP
          const int team = omp_get_num_threads();
          const int tid = omp_get_thread_num();
#else
          const int team = 1;
          const int tid = 0;
#endif
          const auto bounds = triangle_partition(rows, team);
          for (int j = bounds[tid]; j < bounds[tid + 1]; ++j) {
            double* rj = a.row(j);
            const double fj = ri[j];
            const double gj = e[j];
            for (int k = 0; k <= j; ++k) rj[k] -= fj * e[k] + gj * ri[k];
          }
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }

  if (accumulate) {
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
      const int l = i - 1;
      if (d[i] != 0.0) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (l >= kParallelRows)
#endif
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
          for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
        }
      }
      d[i] = a(i, i);
      a(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) {
        a(j, i) = 0.0;
        a(i, j) = 0.0;
      }
    }
  } else {
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
    e[0] = 0.0;
  }
}

struct Rotation {
  int i;
  double c, s;
};

// Applies a rotation sequence (each acting on columns i, i+1) to every row
// of z. Rows are independent, so the batch parallelizes cleanly.
void apply_rotations(Matrix& z, const std::vector<Rotation>& rots) {
  const int n = z.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    if (static_cast<long long>(n) * static_cast<long long>(rots.size()) >= 1 << 20)
#endif
  for (int r = 0; r < n; ++r) {
    double* row = z.row(r);
    for (const auto& [i, c, s] : rots) {
      const double f = row[i + 1];
      row[i + 1] = s * row[i] + c * f;
      row[i] = c * row[i] - s * f;
    }
  }
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
// d[0..n-1] diagonal, e[0..n-2] subdiagonal (e[n-1] scratch). If z is given,
// the accumulated rotations are applied to its columns, so columns of z end
// up as eigenvectors of the original matrix.
void tql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<Rotation> rots;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      while (m < n - 1) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("QL iteration failed to converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      rots.clear();
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) rots.push_back({i, c, s});
      }
      if (!underflow) {
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
      if (z != nullptr && !rots.empty()) apply_rotations(*z, rots);
    }
  }
}

void sort_ascending(std::vector<double>& d, Matrix* z) {
  const int n = static_cast<int>(d.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return d[a] < d[b]; });

  std::vector<double> ds(n);
  for (int k = 0; k < n; ++k) ds[k] = d[perm[k]];
  d = std::move(ds);

  if (z != nullptr) {
    Matrix out(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int r = 0; r < n; ++r) {
      const double* src = z->row(r);
      double* dst = out.row(r);
      for (int k = 0; k < n; ++k) dst[k] = src[perm[k]];
    }
    *z = std::move(out);
  }
}

void require_symmetric(const Matrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("eigensolver requires a symmetric matrix");
}

}  // namespace

std::vector<double> symmetric_eigenvalues(Matrix a) {
  require_symmetric(a);
  std::vector<double> d, e;
  tridiagonalize(a, d, e, false);
  // Shift e so that e[k] couples k and k+1.
  for (std::size_t k = 0; k + 1 < e.size(); ++k) e[k] = e[k + 1];
  tql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

EigenDecomposition symmetric_eigendecomposition(Matrix a) {
  require_symmetric(a);
  std::vector<double> d, e;
  tridiagonalize(a, d, e, true);
  for (std::size_t k = 0; k + 1 < e.size(); ++k) e[k] = e[k + 1];
  tql_implicit(d, e, &a);
  sort_ascending(d, &a);
  return {std::move(d), std::move(a)};
}

namespace {

// Cyclic Jacobi with classic threshold strategy. Serial on purpose.
void jacobi(Matrix& a, std::vector<double>& d, Matrix* v) {
  const int n = a.size();
  if (v != nullptr) *v = Matrix::identity(n);
  d.resize(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off == 0.0 || std::sqrt(off) <= 1e-14 * std::max(1.0, a.max_abs())) break;
    if (sweep == 99) throw std::runtime_error("Jacobi iteration failed to converge");

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (theta == 0.0) {
          t = 1.0;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(p, k) = a(k, p);
          a(k, q) = s * akp + c * akq;
          a(q, k) = a(k, q);
        }
        if (v != nullptr) {
          for (int k = 0; k < n; ++k) {
            const double vkp = (*v)(k, p), vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * vkq;
            (*v)(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) d[i] = a(i, i);
}

}  // namespace

std::vector<double> symmetric_eigenvalues_ref(Matrix a) {
  require_symmetric(a);
  std::vector<double> d;
  jacobi(a, d, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

EigenDecomposition symmetric_eigendecomposition_ref(Matrix a) {
  require_symmetric(a);
  std::vector<double> d;
  Matrix v;
  jacobi(a, d, &v);
  sort_ascending(d, &v);
  return {std::move(d), std::move(v)};
}

}  // namespace hyperlat
