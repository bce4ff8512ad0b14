#include "hyperlat/instances.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#ifndef HYPERLAT_DATA_DIR
#define HYPERLAT_DATA_DIR "data"
#endif

namespace hyperlat {

double GoldenEntry::value() const { return a + b_sqrt5 * std::sqrt(5.0); }

int GoldenSpectrum::dimension() const {
  int d = 0;
  for (const auto& e : entries) d += e.multiplicity;
  return d;
}

std::vector<double> GoldenSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(dimension());
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value());
  return out;
}

std::string to_string(GoldenKind kind) {
  switch (kind) {
    case GoldenKind::LayoutAdjacency: return "layout_adjacency";
    case GoldenKind::FullWave: return "full_wave";
    case GoldenKind::HalfWave: return "half_wave";
  }
  return "?";
}

GoldenSpectrum golden(const std::string& name, GoldenKind kind) {
  std::string dir = HYPERLAT_DATA_DIR;
  if (const char* env = std::getenv("HYPERLAT_DATA_DIR"); env != nullptr && *env != '\0') {
    dir = env;
  }
  const std::string path = dir + "/golden/" + name + "_" + to_string(kind) + ".json";
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("golden: no fixture for ('" + name + "', " + to_string(kind) +
                                ") at " + path);
  }
  nlohmann::json j;
  in >> j;

  GoldenSpectrum g;
  g.name = name;
  g.kind = kind;
  for (const auto& item : j.at("entries")) {
    GoldenEntry e;
    e.a = item.at("value").at("a").get<double>();
    e.b_sqrt5 = item.at("value").at("b_sqrt5").get<double>();
    e.multiplicity = item.at("mult").get<int>();
    if (e.multiplicity <= 0) throw std::invalid_argument("golden: non-positive multiplicity");
    g.entries.push_back(e);
  }
  for (std::size_t i = 1; i < g.entries.size(); ++i) {
    if (g.entries[i - 1].value() >= g.entries[i].value()) {
      throw std::invalid_argument("golden: fixture entries not strictly ascending");
    }
  }
  return g;
}

}  // namespace hyperlat
