#pragma once

#include <utility>
#include <vector>

#include "hyperlat/types.hpp"

namespace hyperlat {

// Closed-form growth analytics for polygon-centered {p,q} layouts built
// from concentric rings. All integer series are evaluated with exact
// 128-bit arithmetic; floating-point closed forms are cross-checks only.
//
// Domain: p >= 4, q >= 3, tau >= 4 (Euclidean or hyperbolic). Triangular
// tilings (p = 3) follow a different bookkeeping and are rejected, and
// spherical pairs (tau < 4) do not grow by rings.

// Growth rate sigma = (tau - 2 + sqrt(tau^2 - 4 tau)) / 2; equals 1 for
// Euclidean pairs and exceeds 1 for hyperbolic ones.
double sigma(const SchlafliSpec& spec);

// Asymptotic flat-band fraction f = (q-2)/(sigma - 1 + q).
double f_infinity(const SchlafliSpec& spec);

// Per-ring vertex counts (b_j, B_j) for j = 1..rings+1: B-type vertices
// connect to the previous ring, b-type do not. b_1 = p, B_1 = 0, and
//   b_{j+1} = [(q-2)(p-3)-1] b_j + [(q-3)(p-3)-1] B_j
//   B_{j+1} = (q-2) b_j + (q-3) B_j.
std::vector<std::pair<long long, long long>> ring_series(const SchlafliSpec& spec, int rings);

// Non-recursive evaluation of B_ring: p(q-2)(sigma^ring - sigma^(2-ring))/(sigma^2 - 1)
// for hyperbolic pairs, p(q-2)(ring-1) for Euclidean ones.
double closed_form_B(const SchlafliSpec& spec, int ring);

// |closed-form B_ring - exact B_ring| evaluated in quad precision, so the
// comparison is meaningful even when B_ring exceeds 2^53.
double closed_form_B_error(const SchlafliSpec& spec, int ring);

struct GrowthCounts {
  long long t = 0;  // polygons: 1 + sum of B_j
  long long n = 0;  // vertices: (B_{rings+1} + 2(t-1))/(q-2)
  long long m = 0;  // edges, from n - m + t = 1
};

GrowthCounts counts(const SchlafliSpec& spec, int rings);

// C_ring = B_{ring+1}/(t_ring - 1) and f_ring = (q-2)/(C_ring + q).
// t_1 - 1 = 0, so the ratio degenerates at ring 1: hyperbolic pairs get
// (inf, 0); Euclidean pairs require ring >= 2.
std::pair<double, double> C_and_f(const SchlafliSpec& spec, int rings);

// Closed-form C_ring for hyperbolic pairs (cross-check for the count ratio).
double closed_form_C(const SchlafliSpec& spec, int rings);

double avg_degree(const SchlafliSpec& spec, int rings);  // 2 m / n
double avg_degree_infinity(const SchlafliSpec& spec);    // 2 (sigma - 1 + q)/(sigma + 1)

struct GrowthRingRow {
  int ring = 0;
  long long b = 0, B = 0;
  long long t = 0, n = 0, m = 0;
  double C_ell = 0.0;
  double f_ell = 0.0;       // (m - n)/m, full-wave fraction
  double f_half_ell = 0.0;  // (m - n + 1)/m, half-wave fraction
};

struct GrowthReport {
  SchlafliSpec spec;
  int rings = 0;
  double sigma = 0.0;
  double f_inf = 0.0;
  double avg_degree = 0.0;      // at `rings`
  double avg_degree_inf = 0.0;
  std::vector<GrowthRingRow> series;  // rows for ring = 1..rings
  long long B_next = 0;               // B_{rings+1}
};

GrowthReport growth_report(const SchlafliSpec& spec, int rings);

struct ConvergenceRow {
  int ring = 0;
  double f_ell = 0.0;
  double f_inf = 0.0;
  double ratio = 0.0;  // f_ell / f_inf
};

std::vector<ConvergenceRow> convergence_table(const SchlafliSpec& spec, int max_rings);

}  // namespace hyperlat
