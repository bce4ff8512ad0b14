#include "hyperlat/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hyperlat {

using json = nlohmann::ordered_json;

std::string format_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

json graph_schema_json(const Graph& g, const SchlafliSpec& spec, int rings,
                       const std::vector<int>* ring_of, const std::vector<char>* type_of) {
  json j;
  j["p"] = spec.p;
  j["q"] = spec.q;
  j["rings"] = rings;
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json jv;
    jv["id"] = v;
    jv["ring"] = ring_of != nullptr ? (*ring_of)[v] : 0;
    jv["type"] = type_of != nullptr ? std::string(1, (*type_of)[v]) : "-";
    vertices.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

struct ParsedGraph {
  Graph graph;
  SchlafliSpec spec;
  int rings = 0;
  std::vector<int> ring_of;
  std::vector<char> type_of;
};

ParsedGraph parse_graph_schema(const json& j) {
  ParsedGraph out;
  const int p = j.at("p").get<int>();
  const int q = j.at("q").get<int>();
  out.spec = SchlafliSpec(p, q);
  out.rings = j.at("rings").get<int>();
  if (out.rings < 0) throw std::invalid_argument("graph json: negative ring count");

  const auto& vertices = j.at("vertices");
  const int n = static_cast<int>(vertices.size());
  out.ring_of.assign(n, 0);
  out.type_of.assign(n, '-');
  std::vector<char> seen(n, 0);
  for (const auto& jv : vertices) {
    const int id = jv.at("id").get<int>();
    if (id < 0 || id >= n || seen[id]) {
      throw std::invalid_argument("graph json: vertex ids must be dense 0..n-1");
    }
    seen[id] = 1;
    out.ring_of[id] = jv.at("ring").get<int>();
    const std::string type = jv.at("type").get<std::string>();
    if (type != "b" && type != "B" && type != "-") {
      throw std::invalid_argument("graph json: vertex type must be 'b', 'B' or '-'");
    }
    out.type_of[id] = type[0];
  }

  std::vector<Edge> edges;
  for (const auto& je : j.at("edges")) {
    if (!je.is_array() || je.size() != 2) {
      throw std::invalid_argument("graph json: each edge must be a pair");
    }
    const int a = je[0].get<int>();
    const int b = je[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("graph json: dangling vertex id in edge");
    }
    edges.emplace_back(a, b);
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("invalid JSON");
  return j;
}

}  // namespace

std::string layout_to_json(const LayoutGraph& layout) {
  const json j = graph_schema_json(layout.graph, layout.spec, layout.rings, &layout.ring_of,
                                   &layout.type_of);
  return j.dump(2) + "\n";
}

LayoutGraph layout_from_json(const std::string& text) {
  ParsedGraph parsed = parse_graph_schema(parse_text(text));
  LayoutGraph layout;
  layout.graph = std::move(parsed.graph);
  layout.spec = parsed.spec;
  layout.rings = parsed.rings;
  layout.ring_of = std::move(parsed.ring_of);
  layout.type_of = std::move(parsed.type_of);
  return layout;
}

void write_layout_json(const LayoutGraph& layout, const std::string& path) {
  write_file(path, layout_to_json(layout));
}

LayoutGraph read_layout_json(const std::string& path) { return layout_from_json(read_file(path)); }

void write_line_graph_json(const Graph& lg, const SchlafliSpec& spec, int rings,
                           const std::string& path) {
  const json j = graph_schema_json(lg, spec, rings, nullptr, nullptr);
  write_file(path, j.dump(2) + "\n");
}

std::string signed_to_json(const SignedLineGraph& slg, const SchlafliSpec& spec, int rings) {
  json j = graph_schema_json(slg.base, spec, rings, nullptr, nullptr);
  json signs = json::array();
  for (int e = 0; e < slg.base.edge_count(); ++e) {
    const auto [i, k] = slg.base.edges()[e];
    signs.push_back(json::array({i, k, slg.signs[e]}));
  }
  j["signs"] = std::move(signs);
  json orient = json::array();
  for (const auto& [foot, head] : slg.orientation.foot_head) {
    orient.push_back(json::array({foot, head}));
  }
  j["orientation"] = std::move(orient);
  return j.dump(2) + "\n";
}

SignedLineGraph signed_from_json(const std::string& text) {
  const json j = parse_text(text);
  ParsedGraph parsed = parse_graph_schema(j);

  SignedLineGraph slg;
  const int m = parsed.graph.vertex_count();

  const auto& orient = j.at("orientation");
  if (static_cast<int>(orient.size()) != m) {
    throw std::invalid_argument("signed json: orientation must cover every line-graph vertex");
  }
  slg.orientation.foot_head.reserve(m);
  slg.back_map.reserve(m);
  for (const auto& jo : orient) {
    const int foot = jo.at(0).get<int>();
    const int head = jo.at(1).get<int>();
    slg.orientation.foot_head.emplace_back(foot, head);
    slg.back_map.emplace_back(std::min(foot, head), std::max(foot, head));
  }
  for (int e = 1; e < m; ++e) {
    if (slg.back_map[e - 1] >= slg.back_map[e]) {
      throw std::invalid_argument("signed json: orientation edges not in canonical order");
    }
  }

  slg.signs.assign(parsed.graph.edge_count(), 0);
  const auto& signs = j.at("signs");
  if (static_cast<int>(signs.size()) != parsed.graph.edge_count()) {
    throw std::invalid_argument("signed json: sign list must cover every edge");
  }
  for (const auto& js : signs) {
    const int a = js.at(0).get<int>();
    const int b = js.at(1).get<int>();
    const int s = js.at(2).get<int>();
    if (s != 1 && s != -1) throw std::invalid_argument("signed json: signs must be +-1");
    const int e = parsed.graph.edge_index(a, b);
    if (e < 0) throw std::invalid_argument("signed json: sign on a non-edge");
    if (slg.signs[e] != 0) throw std::invalid_argument("signed json: duplicate sign entry");
    slg.signs[e] = s;
  }
  slg.base = std::move(parsed.graph);
  return slg;
}

void write_signed_json(const SignedLineGraph& slg, const SchlafliSpec& spec, int rings,
                       const std::string& path) {
  write_file(path, signed_to_json(slg, spec, rings));
}

SignedLineGraph read_signed_json(const std::string& path) {
  return signed_from_json(read_file(path));
}

std::string spectrum_to_csv(const SpectrumMultiset& s) {
  std::string out = "eigenvalue,multiplicity\n";
  for (const auto& e : s.entries) {
    out += format_significant(e.value) + "," + std::to_string(e.multiplicity) + "\n";
  }
  return out;
}

void write_spectrum_csv(const SpectrumMultiset& s, const std::string& path) {
  write_file(path, spectrum_to_csv(s));
}

std::string histogram_to_csv(const SpectrumMultiset& s, int bins, double flat_tol, double margin) {
  if (bins < 10) throw std::invalid_argument("histogram: need at least 10 bins");
  const double lo = -2.0 - margin;
  const double hi = s.max_value() + margin;
  const double width = (hi - lo) / bins;

  std::vector<long long> counts(bins, 0);
  for (const auto& e : s.entries) {
    int bin = static_cast<int>((e.value - lo) / width);
    bin = std::min(std::max(bin, 0), bins - 1);
    counts[bin] += e.multiplicity;
  }

  std::string out = "bin_left,bin_right,count\n";
  for (int b = 0; b < bins; ++b) {
    out += format_significant(lo + b * width) + "," + format_significant(lo + (b + 1) * width) +
           "," + std::to_string(counts[b]) + "\n";
  }
  out += "flat_band_count," + std::to_string(flat_band_multiplicity(s, flat_tol)) + "\n";
  return out;
}

void write_histogram_csv(const SpectrumMultiset& s, int bins, double flat_tol,
                         const std::string& path, double margin) {
  write_file(path, histogram_to_csv(s, bins, flat_tol, margin));
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "ring,f_ell,f_inf,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.ring) + "," + format_significant(r.f_ell) + "," +
           format_significant(r.f_inf) + "," + format_significant(r.ratio) + "\n";
  }
  return out;
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows, const std::string& path) {
  write_file(path, convergence_to_csv(rows));
}

std::string growth_report_to_json(const GrowthReport& report) {
  json j;
  j["p"] = report.spec.p;
  j["q"] = report.spec.q;
  j["tau"] = report.spec.tau();
  j["geometry"] = to_string(classify_geometry(report.spec));
  j["rings"] = report.rings;
  j["sigma"] = report.sigma;
  j["f_inf"] = report.f_inf;
  j["avg_degree"] = report.avg_degree;
  j["avg_degree_inf"] = report.avg_degree_inf;
  j["B_next"] = report.B_next;
  json series = json::array();
  for (const auto& row : report.series) {
    json jr;
    jr["ring"] = row.ring;
    jr["b"] = row.b;
    jr["B"] = row.B;
    jr["t"] = row.t;
    jr["n"] = row.n;
    jr["m"] = row.m;
    if (std::isfinite(row.C_ell)) jr["C_ell"] = row.C_ell;
    jr["f_ell"] = row.f_ell;
    jr["f_half_ell"] = row.f_half_ell;
    series.push_back(std::move(jr));
  }
  j["series"] = std::move(series);
  return j.dump(2) + "\n";
}

void write_growth_report_json(const GrowthReport& report, const std::string& path) {
  write_file(path, growth_report_to_json(report));
}

void write_flat_states(const std::vector<FlatState>& states, const std::string& csv_path,
                       const std::string& sidecar_json_path) {
  std::string csv = "vertex";
  for (std::size_t s = 0; s < states.size(); ++s) csv += ",state_" + std::to_string(s);
  csv += "\n";
  const int dim = states.empty() ? 0 : static_cast<int>(states.front().vector.size());
  for (int v = 0; v < dim; ++v) {
    csv += std::to_string(v);
    for (const auto& st : states) csv += "," + format_significant(st.vector[v]);
    csv += "\n";
  }
  write_file(csv_path, csv);

  json sidecar = json::array();
  for (std::size_t s = 0; s < states.size(); ++s) {
    json js;
    js["index"] = s;
    js["source"] =
        states[s].source == FlatState::Source::NullSpace ? "null_space" : "even_cycle";
    if (states[s].source == FlatState::Source::EvenCycle) js["cycle"] = states[s].cycle;
    sidecar.push_back(std::move(js));
  }
  write_file(sidecar_json_path, sidecar.dump(2) + "\n");
}

}  // namespace hyperlat
