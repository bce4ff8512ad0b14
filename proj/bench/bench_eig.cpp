// Timing comparison of the eigensolver paths: serial Jacobi reference vs
// the Householder+QL solver at one thread and at the full thread count.
//
//   bench_eig [max_n]
//
// Jacobi is skipped above 1200 rows; it is O(n^3) per sweep and exists as a
// correctness reference, not a contender.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "hyperlat/eig.hpp"
#include "hyperlat/linegraph.hpp"
#include "hyperlat/spectra.hpp"
#include "hyperlat/tiling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hyperlat;

namespace {

Matrix random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

double time_solve(const Matrix& a, std::vector<double>& out,
                  std::vector<double> (*solver)(Matrix)) {
  const auto t0 = std::chrono::steady_clock::now();
  out = solver(a);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run_case(const char* name, const Matrix& a) {
  const int n = a.size();
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif

  std::vector<double> ev_par, ev_ser, ev_ref;

#ifdef _OPENMP
  omp_set_num_threads(1);
#endif
  const double t_serial = time_solve(a, ev_ser, symmetric_eigenvalues);
#ifdef _OPENMP
  omp_set_num_threads(max_threads);
#endif
  const double t_parallel = time_solve(a, ev_par, symmetric_eigenvalues);

  double t_jacobi = -1.0, dev_jacobi = 0.0;
  if (n <= 1200) {
    t_jacobi = time_solve(a, ev_ref, symmetric_eigenvalues_ref);
    dev_jacobi = multiset_deviation(ev_par, ev_ref);
  }
  const double dev_threads = multiset_deviation(ev_par, ev_ser);

  std::printf("%-18s n=%5d  ql x1: %7.3f s  ql x%d: %7.3f s  speedup %.2fx", name, n, t_serial,
              max_threads, t_parallel, t_serial / t_parallel);
  if (t_jacobi >= 0.0) {
    std::printf("  jacobi: %7.3f s  |dl| vs jacobi %.1e", t_jacobi, dev_jacobi);
  }
  std::printf("  |dl| across thread counts %.1e\n", dev_threads);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 2048;

  for (int n = 256; n <= max_n; n *= 2) {
    run_case("random", random_symmetric(n, 42 + n));
  }

  // Coupling matrices from real layouts.
  {
    const auto layout = generate_layout(SchlafliSpec(6, 4), 3);
    run_case("{6,4} rings 3 full", adjacency_matrix(line_graph(layout.graph).graph));
  }
  if (max_n >= 2048) {
    const auto layout = generate_layout(SchlafliSpec(6, 4), 4);
    run_case("{6,4} rings 4 full", adjacency_matrix(line_graph(layout.graph).graph));
  }
  return 0;
}
