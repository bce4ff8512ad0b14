#include "hyperlat/growth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperlat {

namespace {

using int128 = __int128;
using quad = __float128;

void require_ring_growable(const SchlafliSpec& spec) {
  if (spec.p < 3 || spec.q < 3) throw std::invalid_argument("growth: p and q must be >= 3");
  if (spec.p == 3) {
    throw std::invalid_argument("growth: {3,q} triangular tilings are unsupported");
  }
  if (spec.tau() < 4) {
    throw std::invalid_argument("growth: {" + std::to_string(spec.p) + "," +
                                std::to_string(spec.q) +
                                "} is spherical and does not grow by rings");
  }
}

long long narrow(int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error(std::string("growth: ") + what + " exceeds 64-bit range");
  }
  return static_cast<long long>(v);
}

struct Series128 {
  std::vector<int128> b, B;  // index j-1 holds ring j, j = 1..rings+1
};

Series128 series128(const SchlafliSpec& spec, int rings) {
  require_ring_growable(spec);
  if (rings < 1) throw std::invalid_argument("growth: rings must be >= 1");
  const int128 c_bb = static_cast<int128>(spec.q - 2) * (spec.p - 3) - 1;
  const int128 c_bB = static_cast<int128>(spec.q - 3) * (spec.p - 3) - 1;
  const int128 c_Bb = spec.q - 2;
  const int128 c_BB = spec.q - 3;

  Series128 s;
  s.b.reserve(rings + 1);
  s.B.reserve(rings + 1);
  s.b.push_back(spec.p);
  s.B.push_back(0);
  for (int j = 1; j <= rings; ++j) {
    const int128 bj = s.b.back();
    const int128 Bj = s.B.back();
    s.b.push_back(c_bb * bj + c_bB * Bj);
    s.B.push_back(c_Bb * bj + c_BB * Bj);
    if (s.b.back() <= 0 || s.B.back() <= 0) {
      throw std::logic_error("growth: ring recurrence left the positive cone");
    }
  }
  return s;
}

quad sqrt_quad(quad x) {
  if (x <= 0) return 0;
  quad r = std::sqrt(static_cast<double>(x));
  r = (r + x / r) / 2;  // two Newton steps push past double precision
  r = (r + x / r) / 2;
  return r;
}

quad sigma_quad(int tau) {
  const quad t = tau;
  return (t - 2 + sqrt_quad(t * t - 4 * t)) / 2;
}

quad pow_int_quad(quad base, int e) {
  quad r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

quad closed_form_B_quad(const SchlafliSpec& spec, int ring) {
  if (spec.tau() == 4) {
    return static_cast<quad>(spec.p) * (spec.q - 2) * (ring - 1);
  }
  const quad s = sigma_quad(spec.tau());
  const quad up = pow_int_quad(s, ring);
  const quad down = ring >= 2 ? 1 / pow_int_quad(s, ring - 2) : pow_int_quad(s, 2 - ring);
  return static_cast<quad>(spec.p) * (spec.q - 2) / (s * s - 1) * (up - down);
}

struct Counts128 {
  int128 t, n, m;
};

Counts128 counts128(const SchlafliSpec& spec, int rings, const Series128& s) {
  int128 t = 1;
  for (int j = 1; j <= rings; ++j) t += s.B[j - 1];
  const int128 numerator = s.B[rings] + 2 * (t - 1);
  if (numerator % (spec.q - 2) != 0) {
    throw std::logic_error("growth: vertex-count formula not divisible by q-2");
  }
  const int128 n = numerator / (spec.q - 2);
  const int128 m = n + t - 1;
  return {t, n, m};
}

}  // namespace

double sigma(const SchlafliSpec& spec) {
  if (spec.p < 3 || spec.q < 3) throw std::invalid_argument("sigma: p and q must be >= 3");
  const int tau = spec.tau();
  if (tau < 4) throw std::invalid_argument("sigma: requires tau >= 4");
  if (tau == 4) return 1.0;
  return (tau - 2 + std::sqrt(static_cast<double>(tau) * tau - 4.0 * tau)) / 2.0;
}

double f_infinity(const SchlafliSpec& spec) {
  return (spec.q - 2) / (sigma(spec) - 1.0 + spec.q);
}

std::vector<std::pair<long long, long long>> ring_series(const SchlafliSpec& spec, int rings) {
  const Series128 s = series128(spec, rings);
  std::vector<std::pair<long long, long long>> out;
  out.reserve(rings + 1);
  for (int j = 0; j <= rings; ++j) {
    out.emplace_back(narrow(s.b[j], "b_j"), narrow(s.B[j], "B_j"));
  }
  return out;
}

double closed_form_B(const SchlafliSpec& spec, int ring) {
  require_ring_growable(spec);
  if (ring < 1) throw std::invalid_argument("closed_form_B: ring must be >= 1");
  return static_cast<double>(closed_form_B_quad(spec, ring));
}

double closed_form_B_error(const SchlafliSpec& spec, int ring) {
  const Series128 s = series128(spec, ring);
  const quad exact = static_cast<quad>(s.B[ring - 1]);
  const quad diff = closed_form_B_quad(spec, ring) - exact;
  return std::abs(static_cast<double>(diff));
}

GrowthCounts counts(const SchlafliSpec& spec, int rings) {
  const Series128 s = series128(spec, rings);
  const Counts128 c = counts128(spec, rings, s);
  return {narrow(c.t, "t"), narrow(c.n, "n"), narrow(c.m, "m")};
}

std::pair<double, double> C_and_f(const SchlafliSpec& spec, int rings) {
  require_ring_growable(spec);
  if (spec.tau() == 4 && rings < 2) {
    throw std::invalid_argument("C_and_f: Euclidean pairs require rings >= 2");
  }
  if (rings < 1) throw std::invalid_argument("C_and_f: rings must be >= 1");
  const Series128 s = series128(spec, rings);
  int128 t = 1;
  for (int j = 1; j <= rings; ++j) t += s.B[j - 1];
  if (t == 1) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  const double C = static_cast<double>(s.B[rings]) / static_cast<double>(t - 1);
  const double f = (spec.q - 2) / (C + spec.q);
  return {C, f};
}

double closed_form_C(const SchlafliSpec& spec, int rings) {
  require_ring_growable(spec);
  if (spec.tau() == 4) {
    if (rings < 2) throw std::invalid_argument("closed_form_C: Euclidean pairs require rings >= 2");
    return 2.0 / (rings - 1);
  }
  const double s = sigma(spec);
  const double numer = (s - 1.0) * (1.0 - std::pow(s, -2.0 * rings));
  const double denom = 1.0 + std::pow(s, 1.0 - 2.0 * rings) - (s + 1.0) * std::pow(s, -rings);
  return numer / denom;
}

double avg_degree(const SchlafliSpec& spec, int rings) {
  const GrowthCounts c = counts(spec, rings);
  return 2.0 * static_cast<double>(c.m) / static_cast<double>(c.n);
}

double avg_degree_infinity(const SchlafliSpec& spec) {
  const double s = sigma(spec);
  return 2.0 * (s - 1.0 + spec.q) / (s + 1.0);
}

GrowthReport growth_report(const SchlafliSpec& spec, int rings) {
  const Series128 s = series128(spec, rings);
  GrowthReport r;
  r.spec = spec;
  r.rings = rings;
  r.sigma = sigma(spec);
  r.f_inf = f_infinity(spec);
  r.avg_degree_inf = avg_degree_infinity(spec);
  r.B_next = narrow(s.B[rings], "B_{rings+1}");

  int128 t = 1;
  for (int j = 1; j <= rings; ++j) {
    t += s.B[j - 1];
    GrowthRingRow row;
    row.ring = j;
    row.b = narrow(s.b[j - 1], "b_j");
    row.B = narrow(s.B[j - 1], "B_j");
    row.t = narrow(t, "t_j");
    const int128 numerator = s.B[j] + 2 * (t - 1);
    if (numerator % (spec.q - 2) != 0) {
      throw std::logic_error("growth: vertex-count formula not divisible by q-2");
    }
    const int128 n = numerator / (spec.q - 2);
    const int128 m = n + t - 1;
    row.n = narrow(n, "n_j");
    row.m = narrow(m, "m_j");
    row.C_ell = t > 1 ? static_cast<double>(s.B[j]) / static_cast<double>(t - 1)
                      : std::numeric_limits<double>::infinity();
    row.f_ell = static_cast<double>(m - n) / static_cast<double>(m);
    row.f_half_ell = static_cast<double>(m - n + 1) / static_cast<double>(m);
    r.series.push_back(row);
  }
  r.avg_degree = 2.0 * static_cast<double>(r.series.back().m) /
                 static_cast<double>(r.series.back().n);
  return r;
}

std::vector<ConvergenceRow> convergence_table(const SchlafliSpec& spec, int max_rings) {
  if (max_rings < 3) throw std::invalid_argument("convergence_table: max_rings must be >= 3");
  const GrowthReport r = growth_report(spec, max_rings);
  std::vector<ConvergenceRow> rows;
  rows.reserve(max_rings);
  for (const auto& row : r.series) {
    rows.push_back({row.ring, row.f_ell, r.f_inf, row.f_ell / r.f_inf});
  }
  return rows;
}

}  // namespace hyperlat
