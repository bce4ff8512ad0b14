#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

// Thrown when a computation would exceed a configured size cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GeometryClass { Spherical, Euclidean, Hyperbolic };

// Schlafli pair {p,q}: regular p-gons, q of them meeting at each corner.
struct SchlafliSpec {
  int p = 0;
  int q = 0;

  SchlafliSpec() = default;
  SchlafliSpec(int p_, int q_);  // requires p >= 3, q >= 3

  int tau() const { return (p - 2) * (q - 2); }

  bool operator==(const SchlafliSpec&) const = default;
};

// Trichotomy on tau = (p-2)(q-2): <4 spherical, =4 Euclidean, >4 hyperbolic.
GeometryClass classify_geometry(const SchlafliSpec& spec);

std::string to_string(GeometryClass g);

}  // namespace hyperlat
