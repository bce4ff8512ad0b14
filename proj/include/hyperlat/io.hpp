#pragma once

#include <string>
#include <vector>

#include "hyperlat/flatband.hpp"
#include "hyperlat/growth.hpp"
#include "hyperlat/linegraph.hpp"
#include "hyperlat/spectra.hpp"
#include "hyperlat/tiling.hpp"

namespace hyperlat {

// Graph JSON schema:
//   {"p":int,"q":int,"rings":int,
//    "vertices":[{"id":int,"ring":int,"type":"b"|"B"|"-"},...],
//    "edges":[[int,int],...]}
// Catalog instances use rings 0 and type "-". Signed line-graph files add
//   "signs":[[i,j,+-1],...] and "orientation":[[foot,head],...].

std::string layout_to_json(const LayoutGraph& layout);
LayoutGraph layout_from_json(const std::string& text);

void write_layout_json(const LayoutGraph& layout, const std::string& path);
LayoutGraph read_layout_json(const std::string& path);

// Plain line graph, annotated with the source layout's p/q/rings for
// provenance; ring/type carry the catalog placeholders.
void write_line_graph_json(const Graph& lg, const SchlafliSpec& spec, int rings,
                           const std::string& path);

std::string signed_to_json(const SignedLineGraph& slg, const SchlafliSpec& spec, int rings);
SignedLineGraph signed_from_json(const std::string& text);
void write_signed_json(const SignedLineGraph& slg, const SchlafliSpec& spec, int rings,
                       const std::string& path);
SignedLineGraph read_signed_json(const std::string& path);

// CSV writers. All values are printed with 12 significant digits.
std::string spectrum_to_csv(const SpectrumMultiset& s);  // eigenvalue,multiplicity
void write_spectrum_csv(const SpectrumMultiset& s, const std::string& path);

// Histogram over [-2 - margin, max + margin]; the flat band is also
// reported exactly in a trailing `flat_band_count,<n>` line so binning can
// never blur it.
std::string histogram_to_csv(const SpectrumMultiset& s, int bins, double flat_tol,
                             double margin = 0.05);
void write_histogram_csv(const SpectrumMultiset& s, int bins, double flat_tol,
                         const std::string& path, double margin = 0.05);

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);  // ring,f_ell,f_inf,ratio
void write_convergence_csv(const std::vector<ConvergenceRow>& rows, const std::string& path);

std::string growth_report_to_json(const GrowthReport& report);
void write_growth_report_json(const GrowthReport& report, const std::string& path);

// One row per line-graph vertex, one column per state; the sidecar JSON
// records each state's source (and cycle, for even-cycle states).
void write_flat_states(const std::vector<FlatState>& states, const std::string& csv_path,
                       const std::string& sidecar_json_path);

std::string format_significant(double v, int digits = 12);

}  // namespace hyperlat
