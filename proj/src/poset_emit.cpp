#include "workbench/poset_emit.hpp"

namespace wb {

Json json_of(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json json_of(const BClass& b) {
  Json j;
  j["nu"] = json_of(b.newton);
  j["kappa"] = b.kappa_nf;
  j["display"] = b.display;
  return j;
}

Json json_of(const RootDatum& d) {
  Json j;
  j["preset"] = d.preset_name;
  j["rank"] = d.rank;
  j["weight_basis"] = d.basis_names;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  j["positive_root_count"] = d.positive_roots.size();
  j["two_rho"] = d.two_rho;
  j["two_rho_check"] = d.two_rho_check;
  return j;
}

Json json_of(const StrataPoset& p) {
  Json j;
  j["nodes"] = Json::array();
  for (const auto& b : p.elements) j["nodes"].push_back(json_of(b));
  j["covering_edges"] = p.covering_edges;
  j["minimal_elements"] = p.minimal_elements;
  return j;
}

Json json_of(const FiberOrbit& o) {
  Json j;
  j["name"] = o.name;
  j["u_trivial"] = o.u_trivial;
  j["u_jordan"] = o.u_jordan;
  Json ranks = Json::array();
  for (size_t c = 0; c < o.rank_data.size(); ++c)
    for (const auto& [ij, r] : o.rank_data[c]) {
      Json e;
      e["chain"] = c;
      e["from"] = ij.first;
      e["to"] = ij.second;
      e["rank"] = r;
      ranks.push_back(e);
    }
  j["rank_data"] = ranks;
  if (o.dim >= 0)
    j["dim"] = o.dim;
  else
    j["dim"] = nullptr;
  return j;
}

Json json_of(const OrbitPoset& p) {
  Json j;
  j["nodes"] = Json::array();
  for (const auto& o : p.orbits) j["nodes"].push_back(json_of(o));
  j["covering_edges"] = p.covering_edges;
  j["closure_is_candidate"] = p.closure_is_candidate;
  return j;
}

Json json_of(const AtomicClass& c) {
  Json j;
  j["b"] = json_of(c.b);
  j["pi"] = c.pi.display();
  j["display"] = c.display();
  return j;
}

Json json_of(const K0Vector& v) {
  Json j;
  j["basis_tag"] = to_string(v.basis_tag);
  j["terms"] = Json::array();
  for (const auto& [c, coeff] : v.coeffs) {
    Json t;
    t["class"] = json_of(c);
    t["coeff"] = coeff;
    j["terms"].push_back(t);
  }
  return j;
}

Json json_of(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  Json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["data"] = rows;
  return j;
}

Json json_of(const RootDatum& d, const StalkTable& t, StalkMode mode) {
  const StalkTable& src = t;
  StalkTable ren;
  const StalkTable* use = &src;
  if (mode == StalkMode::Renormalized) {
    ren = renormalize(d, t);
    use = &ren;
  }
  Json j;
  j["name"] = t.name;
  j["component"] = t.component;
  j["mode"] = mode == StalkMode::Raw ? "raw" : "renormalized";
  j["truncated"] = t.truncated;
  if (t.truncated) j["window_top"] = t.window_top;
  j["reference_checked"] = t.reference_checked;
  Json strata = Json::array();
  for (const auto& [b, degs] : use->entries) {
    Json s;
    s["stratum"] = b.display;
    Json dd = Json::object();
    for (const auto& [deg, labels] : degs) {
      Json ls = Json::array();
      for (const auto& [l, m] : labels)
        for (Int k = 0; k < m; ++k) ls.push_back(l.display());
      dd[std::to_string(deg)] = ls;
    }
    s["degrees"] = dd;
    strata.push_back(s);
  }
  j["strata"] = strata;
  return j;
}

Json json_of(const GaloisMonomial& m) {
  Json j;
  j["exponents"] = m.exponents;
  j["norm_twist"] = m.twist;
  j["display"] = m.display();
  return j;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <typename Nodes>
std::string dot_graph(const std::string& name, const Nodes& labels,
                      const std::vector<std::pair<int, int>>& edges, const std::string& note) {
  std::string s = "digraph \"" + dot_escape(name) + "\" {\n";
  s += "  rankdir=BT;\n  node [shape=box];\n";
  if (!note.empty()) s += "  label=\"" + dot_escape(note) + "\";\n";
  for (size_t i = 0; i < labels.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + dot_escape(labels[i]) + "\"];\n";
  for (const auto& [a, b] : edges)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

}  // namespace

std::string dot_of(const StrataPoset& p, const std::string& graph_name) {
  std::vector<std::string> labels;
  for (const auto& b : p.elements) labels.push_back(b.display);
  return dot_graph(graph_name, labels, p.covering_edges, "");
}

std::string dot_of(const OrbitPoset& p, const std::string& graph_name) {
  std::vector<std::string> labels;
  for (const auto& o : p.orbits) labels.push_back(o.name);
  return dot_graph(graph_name, labels, p.covering_edges,
                   p.closure_is_candidate ? "closure order: candidate" : "");
}

}  // namespace wb
