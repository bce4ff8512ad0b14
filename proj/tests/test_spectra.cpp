#include <doctest.h>

#include <cmath>

#include "hyperlat/eig.hpp"
#include "hyperlat/instances.hpp"
#include "hyperlat/linegraph.hpp"
#include "hyperlat/spectra.hpp"
#include "hyperlat/tiling.hpp"
#include "test_helpers.hpp"

using namespace hyperlat;
using namespace testutil;

namespace {

bool matches_golden(const SpectrumMultiset& s, const GoldenSpectrum& g, double tol) {
  if (static_cast<int>(s.entries.size()) != static_cast<int>(g.entries.size())) return false;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (s.entries[i].multiplicity != g.entries[i].multiplicity) return false;
    if (std::abs(s.entries[i].value - g.entries[i].value()) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("spectra");

TEST_CASE("eigen_spectrum of the 2x2 swap matrix") {
  Matrix m(2);
  m(0, 1) = m(1, 0) = 1.0;
  const auto s = eigen_spectrum(m);
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].value == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(s.entries[0].multiplicity == 1);
  CHECK(s.entries[1].value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.dimension() == 2);
}

TEST_CASE("eigen_spectrum validates symmetry and the dimension cap") {
  Matrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eigen_spectrum(bad), std::invalid_argument);
  CHECK_THROWS_AS(eigen_spectrum(Matrix(12), kDefaultClusterTol, 10), ResourceLimitError);
}

TEST_CASE("clustering groups near-degenerate values and keeps the dimension") {
  const auto s = cluster_eigenvalues({1.0, 1.0 + 1e-12, 1.0 + 2e-12, 2.0, -3.0}, 1e-8);
  REQUIRE(s.entries.size() == 3);
  CHECK(s.entries[0].value == -3.0);
  CHECK(s.entries[1].multiplicity == 3);
  CHECK(s.dimension() == 5);
  for (std::size_t i = 1; i < s.entries.size(); ++i) {
    CHECK(s.entries[i].value - s.entries[i - 1].value > s.cluster_tol);
  }
}

TEST_CASE("dodecahedron adjacency spectrum matches the exact multiset") {
  const auto dodec = catalog_instance("dodecahedron");
  const auto s = eigen_spectrum(adjacency_matrix(dodec.graph));
  CHECK(matches_golden(s, golden("dodecahedron", GoldenKind::LayoutAdjacency), 1e-9));
}

TEST_CASE("icosidodecahedron spectra match the exact multisets") {
  const auto dodec = catalog_instance("dodecahedron");
  const auto full = eigen_spectrum(adjacency_matrix(line_graph(dodec.graph).graph));
  CHECK(matches_golden(full, golden("dodecahedron", GoldenKind::FullWave), 1e-9));

  const auto slg = signed_line_graph(dodec.graph, default_orientation(dodec.graph));
  const auto half = eigen_spectrum(slg.signed_adjacency());
  CHECK(matches_golden(half, golden("dodecahedron", GoldenKind::HalfWave), 1e-9));
}

TEST_CASE("shift identities hold for small generated layouts and the catalog") {
  std::vector<LayoutGraph> layouts{catalog_instance("dodecahedron")};
  for (const auto& spec : {SchlafliSpec(5, 4), SchlafliSpec(4, 4), SchlafliSpec(7, 3)}) {
    for (int l = 1; l <= 2; ++l) layouts.push_back(generate_layout(spec, l));
  }
  for (const auto& layout : layouts) {
    const auto full = verify_identity_full(layout);
    CHECK(full.pass);
    CHECK(full.max_deviation <= 1e-8);
    const auto half = verify_identity_half(layout, default_orientation(layout.graph));
    CHECK(half.pass);
    CHECK(half.max_deviation <= 1e-8);
  }
}

TEST_CASE("identity degenerates to a pure shift when m = n") {
  // One ring of {4,4} is just a 4-cycle: m = n, no extra flat eigenvalues.
  const auto layout = generate_layout(SchlafliSpec(4, 4), 1);
  REQUIRE(layout.graph.edge_count() == layout.graph.vertex_count());
  const auto rep = verify_identity_full(layout);
  CHECK(rep.pass);
  const auto lg_eigs = symmetric_eigenvalues(adjacency_matrix(line_graph(layout.graph).graph));
  auto q_eigs = symmetric_eigenvalues(signless_laplacian(layout.graph));
  for (double& v : q_eigs) v -= 2.0;
  CHECK(multiset_deviation(lg_eigs, q_eigs) <= 1e-10);
}

TEST_CASE("identity checks require a connected layout with m >= n") {
  LayoutGraph tree;
  tree.graph = Graph(3, {{0, 1}, {1, 2}});
  tree.spec = SchlafliSpec(4, 4);
  CHECK_THROWS_AS(verify_identity_full(tree), std::invalid_argument);
}

TEST_CASE("flat-band multiplicities") {
  const auto dodec = catalog_instance("dodecahedron");
  const auto full = eigen_spectrum(adjacency_matrix(line_graph(dodec.graph).graph));
  CHECK(flat_band_multiplicity(full) == 10);
  const auto slg = signed_line_graph(dodec.graph, default_orientation(dodec.graph));
  CHECK(flat_band_multiplicity(eigen_spectrum(slg.signed_adjacency())) == 11);

  // Bipartite layout: full-wave flat band has m - n + 1 states.
  const auto l44 = generate_layout(SchlafliSpec(4, 4), 2);
  const auto s44 = eigen_spectrum(adjacency_matrix(line_graph(l44.graph).graph));
  CHECK(flat_band_multiplicity(s44) == 24 - 16 + 1);
}

TEST_CASE("largest-eigenvalue bounds") {
  const auto dodec = catalog_instance("dodecahedron");
  const auto full = eigen_spectrum(adjacency_matrix(line_graph(dodec.graph).graph));
  const auto half = eigen_spectrum(
      signed_line_graph(dodec.graph, default_orientation(dodec.graph)).signed_adjacency());
  const auto rep = check_bounds(dodec, full, half);
  CHECK(rep.pass);
  // Regular layout: the full-wave maximum hits 2(q-1) exactly.
  CHECK(rep.max_full == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep.max_half == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-12));

  const auto l54 = generate_layout(SchlafliSpec(5, 4), 3);
  const auto f54 = eigen_spectrum(adjacency_matrix(line_graph(l54.graph).graph));
  const auto h54 = eigen_spectrum(
      signed_line_graph(l54.graph, default_orientation(l54.graph)).signed_adjacency());
  const auto rep54 = check_bounds(l54, f54, h54);
  CHECK(rep54.pass);
  CHECK(rep54.max_full >= 2.0);
  CHECK(rep54.max_full <= 6.0 + 1e-9);
}

TEST_CASE("physical spectrum is an affine map of the coupling spectrum") {
  const auto dodec = catalog_instance("dodecahedron");
  const auto full = eigen_spectrum(adjacency_matrix(line_graph(dodec.graph).graph));

  auto mapped = hamiltonian_spectrum(full, {0.0, 1.0, CouplingMode::FullWave});
  CHECK(mapped.max_value() == doctest::Approx(2.0).epsilon(1e-12));  // flat band -> +2

  mapped = hamiltonian_spectrum(full, {5.0, 0.1, CouplingMode::FullWave});
  CHECK(mapped.min_value() == doctest::Approx(5.0 - 0.1 * 4.0).epsilon(1e-12));

  // Multiplicity profile is unchanged (reversed order).
  REQUIRE(mapped.entries.size() == full.entries.size());
  for (std::size_t i = 0; i < full.entries.size(); ++i) {
    CHECK(mapped.entries[i].multiplicity ==
          full.entries[full.entries.size() - 1 - i].multiplicity);
  }
  CHECK_THROWS_AS(hamiltonian_spectrum(full, {0.0, 0.0, CouplingMode::FullWave}),
                  std::invalid_argument);
}

TEST_CASE("gap above the flat band") {
  const auto dodec = catalog_instance("dodecahedron");
  const auto full = eigen_spectrum(adjacency_matrix(line_graph(dodec.graph).graph));
  const auto half = eigen_spectrum(
      signed_line_graph(dodec.graph, default_orientation(dodec.graph)).signed_adjacency());
  const double want = 3.0 - std::sqrt(5.0);
  CHECK(spectral_gap_above_flat(full) == doctest::Approx(want).epsilon(1e-9));
  CHECK(spectral_gap_above_flat(half) == doctest::Approx(want).epsilon(1e-9));

  // Odd p keeps a visible gap; even p fills it in.
  const auto g54 = spectral_gap_above_flat(eigen_spectrum(
      adjacency_matrix(line_graph(generate_layout(SchlafliSpec(5, 4), 3).graph).graph)));
  const auto g64 = spectral_gap_above_flat(eigen_spectrum(
      adjacency_matrix(line_graph(generate_layout(SchlafliSpec(6, 4), 3).graph).graph)));
  CHECK(g54 > g64);
}

TEST_CASE("coupling spectra never dip below -2") {
  for (const auto& spec : {SchlafliSpec(5, 4), SchlafliSpec(6, 4), SchlafliSpec(8, 3)}) {
    const auto layout = generate_layout(spec, 2);
    const auto full = symmetric_eigenvalues(adjacency_matrix(line_graph(layout.graph).graph));
    CHECK(full.front() >= -2.0 - 1e-8);
    const auto half = symmetric_eigenvalues(
        signed_line_graph(layout.graph, default_orientation(layout.graph)).signed_adjacency());
    CHECK(half.front() >= -2.0 - 1e-8);
  }
}

TEST_SUITE_END();
