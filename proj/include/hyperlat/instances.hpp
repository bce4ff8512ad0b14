#pragma once

#include <string>
#include <vector>

namespace hyperlat {

enum class GoldenKind { LayoutAdjacency, FullWave, HalfWave };

// Exact eigenvalue a + b*sqrt(5) with its multiplicity.
struct GoldenEntry {
  double a = 0.0;
  double b_sqrt5 = 0.0;
  int multiplicity = 0;

  double value() const;
};

struct GoldenSpectrum {
  std::string name;
  GoldenKind kind = GoldenKind::LayoutAdjacency;
  std::vector<GoldenEntry> entries;  // ascending by value()

  int dimension() const;
  std::vector<double> expanded() const;
};

// Loads a reference spectrum from the JSON fixtures shipped in data/golden.
// The directory can be overridden with the HYPERLAT_DATA_DIR environment
// variable. Known name: "dodecahedron" (all three kinds).
GoldenSpectrum golden(const std::string& name, GoldenKind kind);

std::string to_string(GoldenKind kind);

}  // namespace hyperlat
