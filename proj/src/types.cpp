#include "hyperlat/types.hpp"

namespace hyperlat {

SchlafliSpec::SchlafliSpec(int p_, int q_) : p(p_), q(q_) {
  if (p < 3 || q < 3) {
    throw std::invalid_argument("Schlafli pair {" + std::to_string(p_) + "," +
                                std::to_string(q_) + "}: both entries must be >= 3");
  }
}

GeometryClass classify_geometry(const SchlafliSpec& spec) {
  if (spec.p < 3 || spec.q < 3) {
    throw std::invalid_argument("classify_geometry: p and q must be >= 3");
  }
  const int tau = spec.tau();
  if (tau < 4) return GeometryClass::Spherical;
  if (tau == 4) return GeometryClass::Euclidean;
  return GeometryClass::Hyperbolic;
}

std::string to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Spherical: return "spherical";
    case GeometryClass::Euclidean: return "euclidean";
    case GeometryClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

}  // namespace hyperlat
