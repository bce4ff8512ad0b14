// Command-line front end: generate layouts and (signed) line graphs, compute
// spectra and histograms, verify the spectral identities and bounds, and
// evaluate the growth analytics.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// limit exceeded.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlat/eig.hpp"
#include "hyperlat/flatband.hpp"
#include "hyperlat/growth.hpp"
#include "hyperlat/io.hpp"
#include "hyperlat/linegraph.hpp"
#include "hyperlat/spectra.hpp"
#include "hyperlat/tiling.hpp"
#include "hyperlat/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace hyperlat;

namespace {

constexpr double kSwitchTol = 1e-9;

double env_or(const char* name, double fallback) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(name) + ": cannot parse '" + v + "'");
    }
  }
  return fallback;
}

struct Tolerances {
  double cluster = kDefaultClusterTol;
  double flat = kDefaultFlatTol;
};

Tolerances resolve_tolerances(const CLI::App* cmd, double cluster_flag, double flat_flag) {
  Tolerances tol;
  tol.cluster = env_or("HYPERLAT_CLUSTER_TOL", tol.cluster);
  tol.flat = env_or("HYPERLAT_FLAT_TOL", tol.flat);
  if (cmd->count("--cluster-tol") > 0) tol.cluster = cluster_flag;
  if (cmd->count("--flat-tol") > 0) tol.flat = flat_flag;
  if (tol.cluster <= 0.0 || tol.flat <= 0.0) {
    throw std::invalid_argument("tolerances must be positive");
  }
  return tol;
}

LayoutGraph load_or_build(const std::string& input, const std::string& catalog, int p, int q,
                          int rings) {
  if (!input.empty()) return read_layout_json(input);
  if (!catalog.empty()) return catalog_instance(catalog);
  if (p == 0 || q == 0 || rings == 0) {
    throw std::invalid_argument("specify either --input, --catalog, or all of --p/--q/--rings");
  }
  return generate_layout(SchlafliSpec(p, q), rings);
}

std::string stem_of(const LayoutGraph& layout, const std::string& input,
                    const std::string& catalog) {
  if (!catalog.empty()) return catalog;
  if (!input.empty()) {
    std::string s = fs::path(input).filename().string();
    for (const char* suffix : {".layout.json", ".json"}) {
      if (s.size() > std::string(suffix).size() && s.ends_with(suffix)) {
        return s.substr(0, s.size() - std::string(suffix).size());
      }
    }
    return s;
  }
  return "p" + std::to_string(layout.spec.p) + "q" + std::to_string(layout.spec.q) + "r" +
         std::to_string(layout.rings);
}

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

std::vector<CheckResult> verify_layout(const LayoutGraph& layout, const Tolerances& tol,
                                       int switches, std::uint64_t seed, int max_switch_dim) {
  std::vector<CheckResult> checks;
  const Graph& g = layout.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto orientation = default_orientation(g);

  const auto lg = line_graph(g);
  const auto slg = signed_line_graph(g, orientation);
  const auto full_eigs = symmetric_eigenvalues(adjacency_matrix(lg.graph));
  const auto half_eigs = symmetric_eigenvalues(slg.signed_adjacency());
  const auto q_eigs = symmetric_eigenvalues(signless_laplacian(g));
  const auto l_eigs = symmetric_eigenvalues(laplacian(g));

  const auto full_id = check_shift_identity(full_eigs, q_eigs, m, n, tol.cluster);
  checks.push_back({"full-wave shift identity", full_id.pass,
                    false, "max deviation " + format_significant(full_id.max_deviation, 3)});
  const auto half_id = check_shift_identity(half_eigs, l_eigs, m, n, tol.cluster);
  checks.push_back({"half-wave shift identity", half_id.pass,
                    false, "max deviation " + format_significant(half_id.max_deviation, 3)});

  const auto full_spec = cluster_eigenvalues(full_eigs, tol.cluster);
  const auto half_spec = cluster_eigenvalues(half_eigs, tol.cluster);
  const auto bounds = check_bounds(layout, full_spec, half_spec);
  checks.push_back({"largest-eigenvalue bounds", bounds.pass, false,
                    "max full " + format_significant(bounds.max_full, 6) + ", max half " +
                        format_significant(bounds.max_half, 6)});

  const bool bip = is_bipartite(g);
  const int want_full = m - n + (bip ? 1 : 0);
  const int want_half = m - n + 1;
  const int got_full = flat_band_multiplicity(full_spec, tol.flat);
  const int got_half = flat_band_multiplicity(half_spec, tol.flat);
  checks.push_back({"flat-band multiplicities", got_full == want_full && got_half == want_half,
                    false,
                    "full " + std::to_string(got_full) + "/" + std::to_string(want_full) +
                        ", half " + std::to_string(got_half) + "/" + std::to_string(want_half)});

  if (bip) {
    const double dev = multiset_deviation(full_eigs, half_eigs);
    checks.push_back({"bipartite gauge equivalence", dev <= tol.cluster, false,
                      "full/half deviation " + format_significant(dev, 3)});
  } else {
    checks.push_back({"non-bipartite flat offset", got_half == got_full + 1, false,
                      "half - full = " + std::to_string(got_half - got_full)});
  }

  if (switches > 0) {
    if (m <= max_switch_dim) {
      std::mt19937_64 rng(seed);
      auto current = slg;
      double worst = 0.0;
      for (int s = 0; s < switches; ++s) {
        current = switch_edge(std::move(current), static_cast<int>(rng() % m));
        const auto eigs = symmetric_eigenvalues(current.signed_adjacency());
        worst = std::max(worst, multiset_deviation(eigs, half_eigs));
      }
      checks.push_back({"switching invariance", worst <= kSwitchTol, false,
                        std::to_string(switches) + " switches, max deviation " +
                            format_significant(worst, 3)});
    } else {
      checks.push_back({"switching invariance", true, true,
                        "skipped (m > " + std::to_string(max_switch_dim) + ")"});
    }
  }
  return checks;
}

int cmd_generate(const std::string& input_catalog, int p, int q, int rings,
                 const std::string& out_dir) {
  LayoutGraph layout = load_or_build("", input_catalog, p, q, rings);
  const std::string stem = stem_of(layout, "", input_catalog);
  fs::create_directories(out_dir);
  const std::string base = (fs::path(out_dir) / stem).string();

  write_layout_json(layout, base + ".layout.json");
  const auto lg = line_graph(layout.graph);
  write_line_graph_json(lg.graph, layout.spec, layout.rings, base + ".linegraph.json");
  const auto slg = signed_line_graph(layout.graph, default_orientation(layout.graph));
  write_signed_json(slg, layout.spec, layout.rings, base + ".signed.json");

  std::cout << base << ".layout.json\n" << base << ".linegraph.json\n"
            << base << ".signed.json\n";
  return 0;
}

int cmd_spectrum(const CLI::App* cmd, const std::string& input, const std::string& mode,
                 double omega0, double t, int bins, double cluster_flag, double flat_flag,
                 const std::string& out_dir, const std::string& flat_states) {
  const Tolerances tol = resolve_tolerances(cmd, cluster_flag, flat_flag);
  LayoutGraph layout = read_layout_json(input);
  const std::string stem = stem_of(layout, input, "");
  fs::create_directories(out_dir);
  const std::string base = (fs::path(out_dir) / (stem + "." + mode)).string();

  Matrix coupling;
  if (mode == "full") {
    coupling = adjacency_matrix(line_graph(layout.graph).graph);
  } else if (mode == "half") {
    coupling = signed_line_graph(layout.graph, default_orientation(layout.graph))
                   .signed_adjacency();
  } else {
    coupling = adjacency_matrix(layout.graph);
  }

  const auto spectrum = eigen_spectrum(coupling, tol.cluster);
  write_spectrum_csv(spectrum, base + ".spectrum.csv");
  write_histogram_csv(spectrum, bins, tol.flat, base + ".histogram.csv");
  std::cout << base << ".spectrum.csv\n" << base << ".histogram.csv\n";

  if (cmd->count("--omega0") > 0 || cmd->count("--t") > 0) {
    HamiltonianParams params{omega0, t,
                             mode == "half" ? CouplingMode::HalfWave : CouplingMode::FullWave};
    write_spectrum_csv(hamiltonian_spectrum(spectrum, params), base + ".physical.csv");
    std::cout << base << ".physical.csv\n";
  }

  if (!flat_states.empty()) {
    const auto basis = flat_band_basis(coupling, tol.flat);
    write_flat_states(basis, flat_states + ".csv", flat_states + ".json");
    std::cout << flat_states << ".csv\n" << flat_states << ".json\n";
  }
  return 0;
}

int cmd_verify(const CLI::App* cmd, const std::string& input, const std::string& catalog, int p,
               int q, int rings, bool suite, int jobs, int switches, std::uint64_t seed,
               double cluster_flag, double flat_flag, const std::string& report_path) {
  const Tolerances tol = resolve_tolerances(cmd, cluster_flag, flat_flag);

  struct Item {
    std::string label;
    LayoutGraph layout;
  };
  std::vector<Item> items;
  if (suite) {
    for (int pp = 4; pp <= 8; ++pp) {
      for (int qq = 3; qq <= 6; ++qq) {
        const SchlafliSpec spec(pp, qq);
        if (spec.tau() < 4) continue;
        for (int l = 1; l <= 3; ++l) {
          items.push_back({"{" + std::to_string(pp) + "," + std::to_string(qq) + "} rings " +
                               std::to_string(l),
                           generate_layout(spec, l)});
        }
      }
    }
    items.push_back({"dodecahedron", catalog_instance("dodecahedron")});
  } else {
    LayoutGraph layout = load_or_build(input, catalog, p, q, rings);
    items.push_back({stem_of(layout, input, catalog), std::move(layout)});
  }

  // In suite mode only small layouts run the switching test; the invariance
  // is size-independent, so the small instances cover it.
  const int max_switch_dim = suite ? 200 : std::numeric_limits<int>::max();

  std::vector<std::vector<CheckResult>> results(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
#endif
  for (std::size_t i = 0; i < items.size(); ++i) {
    results[i] = verify_layout(items[i].layout, tol, switches, seed, max_switch_dim);
  }

  bool all_pass = true;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    nlohmann::ordered_json item;
    item["layout"] = items[i].label;
    nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
    for (const auto& c : results[i]) {
      all_pass = all_pass && (c.pass || c.skipped);
      std::cout << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  " << items[i].label
                << ": " << c.name << " (" << c.detail << ")\n";
      nlohmann::ordered_json jc;
      jc["check"] = c.name;
      jc["pass"] = c.pass;
      jc["skipped"] = c.skipped;
      jc["detail"] = c.detail;
      jchecks.push_back(std::move(jc));
    }
    item["checks"] = std::move(jchecks);
    report.push_back(std::move(item));
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + report_path);
    out << report.dump(2) << "\n";
  }
  std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return all_pass ? 0 : 1;
}

int cmd_growth(int p, int q, int lmax, const std::string& out_dir) {
  const SchlafliSpec spec(p, q);
  const auto report = growth_report(spec, lmax);
  fs::create_directories(out_dir);
  const std::string base =
      (fs::path(out_dir) / ("p" + std::to_string(p) + "q" + std::to_string(q))).string();
  write_growth_report_json(report, base + ".growth.json");
  write_convergence_csv(convergence_table(spec, lmax), base + ".convergence.csv");
  std::cout << base << ".growth.json\n" << base << ".convergence.csv\n";
  std::cout << "f_inf = " << format_significant(report.f_inf, 6) << ", sigma = "
            << format_significant(report.sigma, 8) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"{p,q} lattice layouts, line graphs, spectra and flat bands"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "construct a layout and its (signed) line graph");
  int gp = 0, gq = 0, gr = 0;
  std::string gcat, gout = ".";
  gen->add_option("--p", gp, "polygon side count (>= 4 for ring growth)");
  gen->add_option("--q", gq, "polygons per corner");
  gen->add_option("--rings", gr, "number of concentric rings");
  gen->add_option("--catalog", gcat, "catalog instance name (e.g. dodecahedron)");
  gen->add_option("--out", gout, "output directory");

  // spectrum
  auto* spm = app.add_subcommand("spectrum", "eigenvalue spectrum and histogram of a layout");
  std::string sin, smode = "full", sout = ".", sflat;
  double somega0 = 0.0, st = 1.0, scluster = kDefaultClusterTol, sflat_tol = kDefaultFlatTol;
  int sbins = 60;
  spm->add_option("--input", sin, "layout JSON file")->required();
  spm->add_option("--mode", smode, "full | half | layout")
      ->check(CLI::IsMember({"full", "half", "layout"}));
  spm->add_option("--omega0", somega0, "resonator frequency for the physical spectrum");
  spm->add_option("--t", st, "hopping amplitude (> 0)");
  spm->add_option("--bins", sbins, "histogram bin count (>= 10)")->check(CLI::Range(10, 100000));
  spm->add_option("--cluster-tol", scluster, "eigenvalue clustering tolerance");
  spm->add_option("--flat-tol", sflat_tol, "flat-band membership tolerance");
  spm->add_option("--out", sout, "output directory");
  spm->add_option("--flat-states", sflat, "also write the flat-band basis to PREFIX.{csv,json}");

  // verify
  auto* ver = app.add_subcommand("verify", "check identities, bounds and invariances");
  std::string vin, vcat, vreport;
  int vp = 0, vq = 0, vr = 0, vswitches = 100, vjobs = 1;
  std::uint64_t vseed = 1;
  bool vsuite = false;
  double vcluster = kDefaultClusterTol, vflat = kDefaultFlatTol;
  ver->add_option("--input", vin, "layout JSON file");
  ver->add_option("--catalog", vcat, "catalog instance name");
  ver->add_option("--p", vp, "polygon side count");
  ver->add_option("--q", vq, "polygons per corner");
  ver->add_option("--rings", vr, "number of concentric rings");
  ver->add_flag("--suite", vsuite, "verify the whole p in 4..8, q in 3..6, rings <= 3 matrix");
  ver->add_option("--jobs", vjobs, "parallel suite runs")->check(CLI::Range(1, 64));
  ver->add_option("--switches", vswitches, "random switching operations to test");
  ver->add_option("--seed", vseed, "seed for the random switches");
  ver->add_option("--cluster-tol", vcluster, "eigenvalue clustering tolerance");
  ver->add_option("--flat-tol", vflat, "flat-band membership tolerance");
  ver->add_option("--report", vreport, "write a JSON report to this path");

  // growth
  auto* gro = app.add_subcommand("growth", "ring-count analytics and convergence table");
  int wp = 0, wq = 0, wl = 0;
  std::string wout = ".";
  gro->add_option("--p", wp, "polygon side count")->required();
  gro->add_option("--q", wq, "polygons per corner")->required();
  gro->add_option("--lmax", wl, "largest ring count (>= 3)")->required();
  gro->add_option("--out", wout, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(gcat, gp, gq, gr, gout);
    if (spm->parsed()) {
      return cmd_spectrum(spm, sin, smode, somega0, st, sbins, scluster, sflat_tol, sout, sflat);
    }
    if (ver->parsed()) {
      return cmd_verify(ver, vin, vcat, vp, vq, vr, vsuite, vjobs, vswitches, vseed, vcluster,
                        vflat, vreport);
    }
    if (gro->parsed()) return cmd_growth(wp, wq, wl, wout);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
