#include <doctest.h>

#include <cmath>

#include "hyperlat/growth.hpp"
#include "hyperlat/tiling.hpp"
#include "test_helpers.hpp"

using namespace hyperlat;
using namespace testutil;

TEST_SUITE_BEGIN("growth");

TEST_CASE("sigma") {
  CHECK(sigma(SchlafliSpec(4, 4)) == 1.0);
  CHECK(sigma(SchlafliSpec(5, 4)) == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(sigma(SchlafliSpec(6, 4)) == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(sigma(SchlafliSpec(5, 3)), std::invalid_argument);
}

TEST_CASE("asymptotic flat fraction") {
  CHECK(f_infinity(SchlafliSpec(4, 4)) == 0.5);
  CHECK(std::abs(f_infinity(SchlafliSpec(5, 4)) - 0.297) <= 1e-3);
  CHECK(std::abs(f_infinity(SchlafliSpec(6, 4)) - 0.226) <= 1e-3);
}

TEST_CASE("closed-form B agrees with the recurrence") {
  CHECK(closed_form_B(SchlafliSpec(5, 4), 2) == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(closed_form_B(SchlafliSpec(6, 4), 2) == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(closed_form_B(SchlafliSpec(4, 4), 3) == 16.0);  // Euclidean branch: p(q-2)(ring-1)

  // Sweep every pair with 4 <= tau <= 30 through ring 12.
  for (int p = 4; p <= 17; ++p) {
    for (int q = 3; q <= 17; ++q) {
      const SchlafliSpec spec(p, q);
      if (spec.tau() < 4 || spec.tau() > 30) continue;
      for (int ring = 1; ring <= 12; ++ring) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(ring);
        CHECK(closed_form_B_error(spec, ring) < 1e-6);
      }
    }
  }
}

TEST_CASE("count formulas give the published totals") {
  const auto c54 = counts(SchlafliSpec(5, 4), 4);
  CHECK(c54.t == 201);
  CHECK(c54.n == 480);
  CHECK(c54.m == 680);

  const auto c64 = counts(SchlafliSpec(6, 4), 4);
  CHECK(c64.t == 505);
  CHECK(c64.n == 1728);
  CHECK(c64.m == 2232);

  const auto c44 = counts(SchlafliSpec(4, 4), 2);
  CHECK(c44.t == 9);
  CHECK(c44.n == 16);
  CHECK(c44.m == 24);
}

TEST_CASE("counts agree with constructed graphs") {
  for (const auto& spec :
       {SchlafliSpec(4, 4), SchlafliSpec(5, 4), SchlafliSpec(6, 4), SchlafliSpec(7, 3)}) {
    for (int l = 1; l <= 4; ++l) {
      const auto layout = generate_layout(spec, l);
      const auto c = counts(spec, l);
      CHECK(layout.graph.vertex_count() == c.n);
      CHECK(layout.graph.edge_count() == c.m);
      CHECK(static_cast<long long>(layout.faces.size()) == c.t);
    }
  }
}

TEST_CASE("C and f") {
  // f computed from C matches the count ratio to near machine precision.
  for (const auto& spec : test_matrix_specs()) {
    for (int l = 2; l <= 8; ++l) {
      const auto [C, f] = C_and_f(spec, l);
      const auto c = counts(spec, l);
      const double f_counts = static_cast<double>(c.m - c.n) / static_cast<double>(c.m);
      CHECK(std::abs(f - f_counts) <= 1e-12);
    }
  }

  // Euclidean closed form C = 2/(rings-1), exactly.
  for (int l = 2; l <= 12; ++l) {
    CHECK(C_and_f(SchlafliSpec(4, 4), l).first == 2.0 / (l - 1));
    CHECK(closed_form_C(SchlafliSpec(4, 4), l) == 2.0 / (l - 1));
  }
  CHECK_THROWS_AS(C_and_f(SchlafliSpec(4, 4), 1), std::invalid_argument);

  // {4,4}: C_3 = 1.
  CHECK(C_and_f(SchlafliSpec(4, 4), 3).first == 1.0);

  // Hyperbolic closed form matches the exact ratio; C_6 of {5,4} is within
  // 1% of the limit sigma - 1.
  for (int l = 2; l <= 10; ++l) {
    const auto [C, f] = C_and_f(SchlafliSpec(5, 4), l);
    CHECK(std::abs(C - closed_form_C(SchlafliSpec(5, 4), l)) <= 1e-9);
  }
  const double limit = sigma(SchlafliSpec(5, 4)) - 1.0;
  CHECK(std::abs(C_and_f(SchlafliSpec(5, 4), 6).first - limit) / limit < 0.01);

  // Ring 1 degenerates: no polygons beyond the seed yet.
  const auto [C1, f1] = C_and_f(SchlafliSpec(5, 4), 1);
  CHECK(std::isinf(C1));
  CHECK(f1 == 0.0);
}

TEST_CASE("average degree") {
  CHECK(avg_degree_infinity(SchlafliSpec(4, 4)) == 4.0);
  const double s = sigma(SchlafliSpec(6, 4));
  CHECK(avg_degree_infinity(SchlafliSpec(6, 4)) ==
        doctest::Approx(2.0 * (s + 3.0) / (s + 1.0)).epsilon(1e-12));
  // f = 1 - 2/<k> ties the asymptotic pair together.
  CHECK(f_infinity(SchlafliSpec(6, 4)) ==
        doctest::Approx(1.0 - 2.0 / avg_degree_infinity(SchlafliSpec(6, 4))).epsilon(1e-12));

  for (const auto& spec : test_matrix_specs()) {
    for (int l = 1; l <= 8; ++l) {
      const auto c = counts(spec, l);
      const double k = avg_degree(spec, l);
      const double f_ell = static_cast<double>(c.m - c.n) / static_cast<double>(c.m);
      CHECK(std::abs(f_ell - (1.0 - 2.0 / k)) <= 1e-14);
      if (spec.tau() > 4) CHECK(k < spec.q);  // finite hyperbolic layouts stay below q
    }
  }
}

TEST_CASE("finite fractions increase monotonically towards the limit") {
  for (const auto& spec : test_matrix_specs()) {
    if (spec.tau() == 4) continue;
    const double f_inf = f_infinity(spec);
    double prev = -1.0;
    for (int l = 1; l <= 12; ++l) {
      const auto c = counts(spec, l);
      const double f_ell = static_cast<double>(c.m - c.n) / static_cast<double>(c.m);
      CHECK(f_ell < f_inf);
      CHECK(f_ell > prev);
      prev = f_ell;
    }
  }
}

TEST_CASE("convergence is exponential for hyperbolic pairs") {
  for (const auto& spec : {SchlafliSpec(5, 4), SchlafliSpec(6, 4), SchlafliSpec(7, 3)}) {
    const auto rows = convergence_table(spec, 11);
    const double s = sigma(spec);
    for (int l = 4; l <= 10; ++l) {
      const double deficit = std::abs(1.0 - rows[l - 1].ratio);
      const double next = std::abs(1.0 - rows[l].ratio);
      CHECK(deficit / next >= s / 2.0);
      CHECK(deficit / next > 2.0);
    }
    // Monotone approach from below.
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
    CHECK(rows.back().ratio < 1.0);
  }
  CHECK_THROWS_AS(convergence_table(SchlafliSpec(5, 4), 2), std::invalid_argument);
}

TEST_CASE("Euclidean convergence follows the power law") {
  const auto rows = convergence_table(SchlafliSpec(4, 4), 12);
  // 1 - f_l/f = 1/(2l-1) for the square pair.
  for (const auto& row : rows) {
    if (row.ring < 2) continue;
    CHECK(std::abs(1.0 - row.ratio - 1.0 / (2.0 * row.ring - 1.0)) <= 1e-12);
  }
}

TEST_CASE("growth report carries both finite fractions") {
  const auto report = growth_report(SchlafliSpec(5, 4), 4);
  REQUIRE(report.series.size() == 4);
  const auto& row = report.series.back();
  CHECK(row.m == 680);
  CHECK(row.f_ell == doctest::Approx(200.0 / 680.0).epsilon(1e-14));
  CHECK(row.f_half_ell == doctest::Approx(201.0 / 680.0).epsilon(1e-14));
  CHECK(report.B_next == 560);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(counts(SchlafliSpec(3, 7), 2), std::invalid_argument);
  CHECK_THROWS_AS(counts(SchlafliSpec(4, 3), 2), std::invalid_argument);  // tau = 2
  CHECK_THROWS_AS(ring_series(SchlafliSpec(5, 4), 0), std::invalid_argument);
}

TEST_SUITE_END();
