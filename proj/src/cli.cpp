#include "workbench/cli.hpp"

#include <CLI11.hpp>

#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "workbench/error.hpp"
#include "workbench/poset_emit.hpp"

namespace wb::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- input parsing ----------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

IntVec parse_intvec(const std::string& s) {
  IntVec v;
  for (const auto& tok : split(s, ',')) {
    std::string t = trim(tok);
    if (t.empty()) continue;
    try {
      v.push_back(std::stoll(t));
    } catch (...) {
      throw Error("BadInput", "expected integer, got '" + t + "'");
    }
  }
  if (v.empty()) throw Error("BadInput", "empty integer vector");
  return v;
}

RatVec parse_ratvec(const std::string& s) {
  RatVec v;
  for (const auto& tok : split(s, ','))
    if (!trim(tok).empty()) v.push_back(parse_rat(trim(tok)));
  if (v.empty()) throw Error("BadInput", "empty vector");
  return v;
}

std::vector<int> parse_levi(const std::string& s) {
  std::vector<int> out;
  std::string t = trim(s);
  if (t.empty() || t == "none") return out;
  for (Int x : parse_intvec(t)) {
    if (x < 1) throw Error("BadLeviSubset", "simple root indices are 1-based");
    out.push_back(static_cast<int>(x) - 1);
  }
  return out;
}

// ---- root-datum spec files ----------------------------------------------

std::string toml_unquote(const std::string& raw);

Mat mat_from_rows(const std::vector<IntVec>& rows) {
  Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<IntVec> int_rows(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error("BadConfig", "datum spec needs array '" + key + "'");
  std::vector<IntVec> rows;
  for (const auto& row : j[key]) {
    IntVec r;
    for (const auto& x : row) r.push_back(x.get<Int>());
    rows.push_back(std::move(r));
  }
  return rows;
}

RootDatum datum_from_json(const Json& j) {
  std::string type = j.value("type", "preset");
  if (type == "preset") {
    if (!j.contains("name")) throw Error("BadConfig", "preset datum spec needs 'name'");
    return build_root_datum(j["name"].get<std::string>());
  }
  if (type != "explicit") throw Error("BadConfig", "datum spec type must be preset or explicit");
  int rank = j.value("rank", 0);
  auto roots = int_rows(j, "simple_roots");
  auto coroots = int_rows(j, "simple_coroots");
  Mat pairing = j.contains("pairing") ? mat_from_rows(int_rows(j, "pairing")) : Mat::identity(rank);
  std::vector<std::string> names;
  if (j.contains("basis"))
    for (const auto& n : j["basis"]) names.push_back(n.get<std::string>());
  return build_root_datum(rank, roots, coroots, pairing, j.value("name", "explicit"), names);
}

// Nested integer arrays, strings, and ints from the flat TOML subset,
// upgraded just enough for datum files.
Json toml_value_to_json(const std::string& raw) {
  std::string v = trim(raw);
  if (v.empty()) throw Error("BadConfig", "empty TOML value");
  if (v.front() == '"') return toml_unquote(v);
  if (v.front() == '[') {
    if (v.back() != ']') throw Error("BadConfig", "unterminated array: '" + v + "'");
    Json arr = Json::array();
    std::string inner = v.substr(1, v.size() - 2);
    int depth = 0;
    std::string item;
    for (char c : inner) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == ',' && depth == 0) {
        if (!trim(item).empty()) arr.push_back(toml_value_to_json(item));
        item.clear();
      } else {
        item += c;
      }
    }
    if (!trim(item).empty()) arr.push_back(toml_value_to_json(item));
    return arr;
  }
  try {
    return std::stoll(v);
  } catch (...) {
    return v;  // bare token as string
  }
}

RootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadConfig", "cannot open datum spec '" + path + "'");
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return datum_from_json(Json::parse(in, nullptr, true, true));
  Json j = Json::object();
  std::string line;
  while (std::getline(in, line)) {
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw Error("BadConfig", "expected key = value: '" + t + "'");
    j[trim(t.substr(0, eq))] = toml_value_to_json(t.substr(eq + 1));
  }
  return datum_from_json(j);
}

// Preset name, or a path to a .json/.toml root-datum spec.
RootDatum resolve_group(const std::string& spec) {
  if (spec.size() >= 5 &&
      (spec.substr(spec.size() - 5) == ".json" || spec.substr(spec.size() - 5) == ".toml"))
    return load_datum_file(spec);
  return build_root_datum(spec);
}

// Highest weight of a named representation of the dual group of GL(n)/this
// group.  "std", "std-dual", "det", "det-dual", "triv" or "hw:a,b,...".
IntVec parse_rep(const std::string& spec, int rank) {
  std::string s = trim(spec);
  if (s.rfind("hw:", 0) == 0) return parse_intvec(s.substr(3));
  if (s == "triv" || s == "1") return IntVec(rank, 0);
  if (s == "std") {
    IntVec v(rank, 0);
    v[0] = 1;
    return v;
  }
  if (s == "std-dual" || s == "std^") {
    IntVec v(rank, 0);
    v[rank - 1] = -1;
    return v;
  }
  if (s == "det") return IntVec(rank, 1);
  if (s == "det-dual") return IntVec(rank, -1);
  throw Error("BadInput", "unknown representation '" + spec + "'");
}

// ---- config files ------------------------------------------------------

std::string json_scalar_to_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw Error("BadConfig", "unsupported config value " + v.dump());
}

std::map<std::string, std::string> load_json_config(std::istream& in) {
  Json j = Json::parse(in, nullptr, true, true);
  if (!j.is_object()) throw Error("BadConfig", "config root must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, val] : j.items()) {
    if (val.is_array()) {
      std::string s;
      for (const auto& e : val) {
        if (!s.empty()) s += ',';
        s += json_scalar_to_string(e);
      }
      out[key] = s;
    } else {
      out[key] = json_scalar_to_string(val);
    }
  }
  return out;
}

std::string toml_unquote(const std::string& raw) {
  std::string t = trim(raw);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
  return t;
}

// Flat key = value TOML subset: strings, numbers, arrays; # comments.
std::map<std::string, std::string> load_toml_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') throw Error("BadConfig", "TOML tables are not supported; use flat keys");
    auto eq = t.find('=');
    if (eq == std::string::npos) throw Error("BadConfig", "expected key = value: '" + t + "'");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (!val.empty() && val.front() == '[') {
      if (val.back() != ']') throw Error("BadConfig", "unterminated array: '" + val + "'");
      std::string inner = val.substr(1, val.size() - 2);
      std::string joined;
      for (const auto& item : split(inner, ',')) {
        std::string u = toml_unquote(item);
        if (u.empty()) continue;
        if (!joined.empty()) joined += ',';
        joined += u;
      }
      out[key] = joined;
    } else {
      out[key] = toml_unquote(val);
    }
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadConfig", "cannot open config file '" + path + "'");
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return load_json_config(in);
  return load_toml_config(in);
}

// ---- flag plumbing ------------------------------------------------------

const std::vector<std::string> kFlagNames = {
    "group", "lambda", "mu",    "levi", "chars", "slopes", "slopes2", "kappa", "kappa2",
    "j",     "rep",    "bound", "denom", "window", "family", "n",      "jmax"};

struct Flags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string format = "pretty";
  std::string config_path;

  std::map<std::string, std::string> config;

  void load() {
    if (!config_path.empty()) config = load_config(config_path);
    if (config.count("format") && format == "pretty" && options.at("format")->count() == 0)
      format = config.at("format");
  }

  std::optional<std::string> find(const std::string& key) const {
    auto it = options.find(key);
    if (it != options.end() && it->second->count() > 0) return values.at(key);
    auto ic = config.find(key);
    if (ic != config.end()) return ic->second;
    return std::nullopt;
  }

  std::string require(const std::string& key) const {
    auto v = find(key);
    if (!v) throw UsageError("missing required option --" + key);
    return *v;
  }

  std::string get_or(const std::string& key, const std::string& fallback) const {
    auto v = find(key);
    return v ? *v : fallback;
  }
};

Flags& add_flags(CLI::App* cmd, std::deque<Flags>& store) {
  store.emplace_back();
  Flags& f = store.back();
  for (const auto& name : kFlagNames) {
    f.values[name] = "";
    f.options[name] = cmd->add_option("--" + name, f.values[name]);
  }
  f.options["format"] = cmd->add_option("--format", f.format)
                            ->check(CLI::IsMember({"json", "csv", "pretty", "dot"}));
  cmd->add_option("--config", f.config_path);
  return f;
}

// ---- output ------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_csv(std::ostream& os, const Table& t) {
  for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_escape(t.header[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
}

struct Output {
  Json json;
  Table table;
  std::string pretty;
  std::string dot;  // empty unless poset-valued
};

void emit(std::ostream& os, const Output& o, const std::string& format) {
  if (format == "json") {
    os << o.json.dump(2) << "\n";
  } else if (format == "csv") {
    emit_csv(os, o.table);
  } else if (format == "dot") {
    if (o.dot.empty()) throw UsageError("dot output is only available for poset-valued results");
    os << o.dot;
  } else {
    os << o.pretty;
  }
}

std::string pretty_kv(const std::initializer_list<std::pair<std::string, std::string>>& kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += k + ": " + v + "\n";
  return s;
}

// ---- subcommand implementations -----------------------------------------

Output cmd_root_datum(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  Output o;
  o.json["datum"] = json_of(d);
  std::string worder = "?";
  try {
    o.json["weyl_order"] = weyl_group(d).size();
    worder = std::to_string(o.json["weyl_order"].get<size_t>());
  } catch (const Error&) {
    o.json["weyl_order"] = nullptr;
  }
  o.table.header = {"key", "value"};
  o.table.rows = {{"preset", d.preset_name},
                  {"rank", std::to_string(d.rank)},
                  {"positive_roots", std::to_string(d.positive_roots.size())},
                  {"two_rho", to_string(d.two_rho)},
                  {"two_rho_check", to_string(d.two_rho_check)},
                  {"weyl_order", worder}};
  o.pretty = pretty_kv({{"preset", d.preset_name},
                        {"rank", std::to_string(d.rank)},
                        {"positive roots", std::to_string(d.positive_roots.size())},
                        {"2rho", to_string(d.two_rho)},
                        {"2rho_check", to_string(d.two_rho_check)},
                        {"|W|", worder}});
  for (int i = 0; i < d.ssrank(); ++i) {
    o.pretty += "alpha_" + std::to_string(i + 1) + " = " + to_string(d.simple_roots[i]) +
                "   alpha_" + std::to_string(i + 1) + "^ = " + to_string(d.simple_coroots[i]) + "\n";
  }
  return o;
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

Output cmd_weyl(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  auto w = weyl_group(d);
  std::sort(w.begin(), w.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  WeylElement w0 = longest_element(d);
  Output o;
  o.json["order"] = w.size();
  o.json["longest"] = Json{{"word", word_str(w0.word)}, {"length", w0.length()}};
  o.json["elements"] = Json::array();
  o.table.header = {"word", "length"};
  for (const auto& e : w) {
    Json je;
    je["word"] = word_str(e.word);
    je["length"] = e.length();
    je["matrix_on_characters"] = json_of(e.on_chars)["data"];
    o.json["elements"].push_back(je);
    o.table.rows.push_back({word_str(e.word), std::to_string(e.length())});
  }
  o.pretty = "|W| = " + std::to_string(w.size()) + ", longest = " + word_str(w0.word) +
             " (length " + std::to_string(w0.length()) + ")\n";
  for (const auto& e : w) o.pretty += word_str(e.word) + "  (length " + std::to_string(e.length()) + ")\n";
  return o;
}

Output cmd_tensor(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  IntVec lambda = parse_intvec(f.require("lambda"));
  IntVec mu = parse_intvec(f.require("mu"));
  auto dec = tensor_decompose(d, lambda, mu);
  Output o;
  o.json["group"] = d.preset_name;
  o.json["lambda"] = lambda;
  o.json["mu"] = mu;
  o.json["dim_product"] = weyl_dim(d, lambda) * weyl_dim(d, mu);
  o.json["terms"] = Json::array();
  o.table.header = {"highest_weight", "mult", "dim"};
  Int check = 0;
  for (const auto& [hw, mult] : dec) {
    Int dim = weyl_dim(d, hw);
    check += mult * dim;
    o.json["terms"].push_back(Json{{"highest_weight", hw}, {"mult", mult}, {"dim", dim}});
    o.table.rows.push_back({to_string(hw), std::to_string(mult), std::to_string(dim)});
    o.pretty += "V" + to_string(hw) + " ^ " + std::to_string(mult) + "  (dim " + std::to_string(dim) + ")\n";
  }
  o.json["dim_check"] = check;
  o.pretty += "total dim " + std::to_string(check) + "\n";
  return o;
}

Output cmd_parabolic_filtration(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  IntVec lambda = parse_intvec(f.require("lambda"));
  std::vector<int> levi = parse_levi(f.get_or("levi", ""));
  auto filt = parabolic_filtration(d, lambda, levi);
  Output o;
  o.json["group"] = d.preset_name;
  o.json["lambda"] = lambda;
  Json jlevi = Json::array();
  for (int i : levi) jlevi.push_back(i + 1);
  o.json["levi"] = jlevi;
  o.json["grading_cocharacter"] = json_of(levi_grading_cocharacter(d, levi));
  o.json["levels"] = Json::array();
  o.table.header = {"level", "dim", "levi_highest_weight", "mult"};
  Json dims = Json::array();
  for (const auto& level : filt.levels) {
    Json jl;
    jl["pairing"] = to_string(level.pairing_value);
    jl["dim"] = level.dim;
    jl["pieces"] = Json::array();
    for (const auto& [hw, mult] : level.levi_irreps) {
      jl["pieces"].push_back(Json{{"levi_highest_weight", hw}, {"mult", mult}});
      o.table.rows.push_back({to_string(level.pairing_value), std::to_string(level.dim),
                              to_string(hw), std::to_string(mult)});
    }
    o.json["levels"].push_back(jl);
    dims.push_back(level.dim);
    o.pretty += "level " + to_string(level.pairing_value) + ": dim " + std::to_string(level.dim) + "\n";
  }
  o.json["graded_dims"] = dims;
  o.json["level_order"] = "increasing pairing with the Levi central cocharacter";
  return o;
}

Output cmd_bg_enum(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  Rat bound = parse_rat(f.require("bound"));
  Int denom = std::stoll(f.get_or("denom", "1"));
  auto classes = enumerate_bg(d, bound, denom);
  Output o;
  o.json["group"] = d.preset_name;
  o.json["bound"] = to_string(bound);
  o.json["denom"] = denom;
  o.json["classes"] = Json::array();
  o.table.header = {"display", "nu", "kappa"};
  for (const auto& b : classes) {
    o.json["classes"].push_back(json_of(b));
    o.table.rows.push_back({b.display, to_string(b.newton), to_string(b.kappa_nf)});
    o.pretty += b.display + "  nu=" + to_string(b.newton) + "  kappa=" + to_string(b.kappa_nf) + "\n";
  }
  o.pretty += std::to_string(classes.size()) + " classes\n";
  return o;
}

BClass resolve_bclass(const RootDatum& d, const Flags& f, const std::string& slopes_key,
                      const std::string& kappa_key) {
  RatVec nu = parse_ratvec(f.require(slopes_key));
  auto kappa = f.find(kappa_key);
  if (kappa) return validate_bclass(d, nu, parse_intvec(*kappa));
  auto b = bclass_from_newton(d, nu);
  if (!b)
    throw Error("AmbiguousKappa",
                "no unique kappa for nu=" + to_string(nu) + "; pass --" + kappa_key);
  return *b;
}

Output cmd_newton_order(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  BClass a = resolve_bclass(d, f, "slopes", "kappa");
  BClass b = resolve_bclass(d, f, "slopes2", "kappa2");
  Output o;
  bool leq = newton_leq(d, a, b), geq = newton_leq(d, b, a);
  o.json["b"] = json_of(a);
  o.json["b2"] = json_of(b);
  o.json["leq"] = leq;
  o.json["geq"] = geq;
  o.table.header = {"relation", "value"};
  o.table.rows = {{"b <= b2", leq ? "true" : "false"}, {"b2 <= b", geq ? "true" : "false"}};
  o.pretty = a.display + " <= " + b.display + " : " + (leq ? "true" : "false") + "\n" + b.display +
             " <= " + a.display + " : " + (geq ? "true" : "false") + "\n";
  return o;
}

Output cmd_strata_poset(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  Rat bound = parse_rat(f.require("bound"));
  Int denom = std::stoll(f.get_or("denom", "1"));
  auto poset = strata_poset(d, enumerate_bg(d, bound, denom));
  Output o;
  o.json = json_of(poset);
  o.dot = dot_of(poset, d.preset_name + " strata");
  o.table.header = {"from", "to"};
  for (const auto& [a, b] : poset.covering_edges)
    o.table.rows.push_back({poset.elements[a].display, poset.elements[b].display});
  for (const auto& b : poset.elements) o.pretty += b.display + "\n";
  o.pretty += "covering edges:\n";
  for (const auto& [a, b] : poset.covering_edges)
    o.pretty += "  " + poset.elements[a].display + " -> " + poset.elements[b].display + "\n";
  return o;
}

Output cmd_param_check(const Flags& f) {
  ToralParameter phi = parse_parameter(f.require("chars"));
  Output o;
  bool gen = is_generic(phi), gens = is_generous(phi);
  o.json["chars"] = Json::array();
  for (const auto& c : phi.chars) o.json["chars"].push_back(Json{{"symbol", c.symbol}, {"twist", c.twist}});
  o.json["generic"] = gen;
  o.json["generous"] = gens;
  o.json["centralizer"] = Json::array();
  std::string cent;
  for (const auto& [c, m] : centralizer(phi).blocks) {
    o.json["centralizer"].push_back(Json{{"symbol", c.symbol}, {"twist", c.twist}, {"mult", m}});
    if (!cent.empty()) cent += " x ";
    cent += "GL" + std::to_string(m);
  }
  o.table.header = {"key", "value"};
  o.table.rows = {{"generic", gen ? "true" : "false"},
                  {"generous", gens ? "true" : "false"},
                  {"centralizer", cent}};
  o.pretty = pretty_kv({{"generic", gen ? "true" : "false"},
                        {"generous", gens ? "true" : "false"},
                        {"S_phi", cent}});
  return o;
}

Output orbit_output(const OrbitPoset& poset, const std::string& name) {
  Output o;
  o.json = json_of(poset);
  o.dot = dot_of(poset, name);
  o.table.header = {"name", "dim", "u_trivial"};
  for (const auto& orb : poset.orbits) {
    o.table.rows.push_back({orb.name, orb.dim >= 0 ? std::to_string(orb.dim) : "-",
                            orb.u_trivial ? "true" : "false"});
    o.pretty += orb.name + (orb.dim >= 0 ? "  dim " + std::to_string(orb.dim) : "") + "\n";
  }
  o.pretty += std::to_string(poset.orbits.size()) + " orbits";
  if (poset.closure_is_candidate) o.pretty += " (closure order: candidate)";
  o.pretty += "\n";
  return o;
}

Output cmd_vogan_fiber(const Flags& f) {
  ToralParameter phi = parse_parameter(f.require("chars"));
  return orbit_output(vogan_orbits(phi), "Vogan variety");
}

Output cmd_full_fiber(const Flags& f) {
  ToralParameter phi = parse_parameter(f.require("chars"));
  return orbit_output(fiber_orbits(phi), "fiber over x_phi");
}

Output atomic_output(const AtomicClass& c) {
  Output o;
  o.json["class"] = json_of(c);
  o.table.header = {"b", "pi"};
  o.table.rows = {{c.b.display, c.pi.display()}};
  o.pretty = c.display() + "\n";
  return o;
}

Output cmd_bmo(const Flags& f) {
  if (f.find("chars")) {
    ToralParameter phi = parse_parameter(f.require("chars"));
    IntVec j = parse_intvec(f.get_or("j", f.get_or("slopes", "")));
    return atomic_output(bmo_generous_toral(phi, j));
  }
  RootDatum d = resolve_group(f.require("group"));
  IntVec lambda = parse_intvec(f.require("lambda"));
  return atomic_output(bmo_trivial(d, lambda));
}

Output cmd_hecke(const Flags& f) {
  ToralParameter phi = parse_parameter(f.require("chars"));
  IntVec j = parse_intvec(f.get_or("j", f.get_or("slopes", "")));
  IntVec hw = parse_rep(f.require("rep"), phi.n());
  auto terms = hecke_generous(phi, j, hw);
  Output o;
  o.json["input_class"] = json_of(bmo_generous_toral(phi, j));
  o.json["rep_highest_weight"] = hw;
  o.json["terms"] = Json::array();
  o.table.header = {"class", "galois_monomial", "mult"};
  Int total = 0;
  for (const auto& t : terms) {
    Json jt;
    jt["class"] = json_of(t.cls);
    jt["monomial"] = json_of(t.monomial);
    jt["mult"] = t.multiplicity;
    jt["weight"] = t.weight;
    o.json["terms"].push_back(jt);
    o.table.rows.push_back({t.cls.display(), t.monomial.display(), std::to_string(t.multiplicity)});
    o.pretty += t.cls.display() + "  (x) " + t.monomial.display() + "   mult " +
                std::to_string(t.multiplicity) + "\n";
    total += t.multiplicity;
  }
  o.json["total_multiplicity"] = total;
  o.pretty += "total multiplicity " + std::to_string(total) + "\n";
  return o;
}

Output cmd_eigensheaf(const Flags& f) {
  ToralParameter phi = parse_parameter(f.require("chars"));
  Int window = std::stoll(f.get_or("window", "1"));
  auto rep = eigensheaf_multiset(phi, window);
  Output o;
  o.json["window"] = rep.window;
  o.json["truncated"] = rep.truncated;
  o.json["classes"] = Json::array();
  o.table.header = {"class", "mult"};
  for (const auto& c : rep.classes) {
    o.json["classes"].push_back(json_of(c));
    o.table.rows.push_back({c.display(), "1"});
    o.pretty += c.display() + "\n";
  }
  o.pretty += std::to_string(rep.classes.size()) + " summands, each multiplicity 1 (window " +
              std::to_string(window) + ", truncated)\n";
  return o;
}

Output k0_output(const RootDatum& d, const K0Vector& v, Json extra) {
  Output o;
  o.json = std::move(extra);
  o.json["vector"] = json_of(v);
  o.table.header = {"class", "coeff"};
  for (const auto& [c, coeff] : v.coeffs)
    o.table.rows.push_back({c.display(), std::to_string(coeff)});
  o.pretty = display(v) + "\n";
  (void)d;
  return o;
}

Output cmd_k0_expand(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  IntVec lambda = parse_intvec(f.require("lambda"));
  IntVec target = lambda + d.two_rho_check;
  K0Vector v = alternating_expansion(d, target);
  Json extra;
  extra["group"] = d.preset_name;
  extra["lambda"] = lambda;
  extra["target"] = target;
  return k0_output(d, v, std::move(extra));
}

Output cmd_k0_hecke(const Flags& f) {
  RootDatum d = resolve_group(f.require("group"));
  IntVec lambda = parse_intvec(f.require("lambda"));
  IntVec hw = parse_rep(f.require("rep"), d.rank);
  K0Vector v = hecke_k0_trivial(d, lambda, hw);
  Json extra;
  extra["group"] = d.preset_name;
  extra["lambda"] = lambda;
  extra["rep_highest_weight"] = hw;
  return k0_output(d, v, std::move(extra));
}

Output cmd_k0_verify(const Flags& f) {
  RootDatum d = resolve_group(f.get_or("group", "PGL2"));
  int max_n = static_cast<int>(std::stoll(f.get_or("n", "10")));
  K0Block block = build_block(d, max_n);
  GammaReport rep = verify_gamma(d, block);
  Output o;
  o.json["window_max"] = max_n;
  o.json["classes"] = Json::array();
  for (const auto& c : block.classes) o.json["classes"].push_back(json_of(c));
  o.json["gamma_shriek"] = json_of(block.gamma_shriek);
  o.json["gamma_sharp"] = json_of(block.gamma_sharp);
  o.json["gamma_star"] = json_of(block.gamma_star);
  o.json["star_left_inverse"] = rep.star_left_inverse;
  o.json["shriek_equals_sharp"] = rep.shriek_equals_sharp;
  o.json["positivity"] = rep.positivity;
  o.json["ok"] = rep.ok();
  o.table.header = {"check", "result"};
  o.table.rows = {{"gamma_star . gamma_shriek = id", rep.star_left_inverse ? "pass" : "fail"},
                  {"gamma_shriek = gamma_sharp", rep.shriek_equals_sharp ? "pass" : "fail"},
                  {"hadal positivity", rep.positivity ? "pass" : "fail"}};
  for (const auto& note : rep.notes) o.pretty += note + "\n";
  o.pretty += rep.ok() ? "ok\n" : "FAILED\n";
  return o;
}

Output cmd_pgl2_stalks(const Flags& f) {
  RootDatum d = resolve_group(f.get_or("group", "PGL2"));
  std::string family = f.require("family");
  int n = static_cast<int>(std::stoll(f.require("n")));
  StalkTable t;
  Json extra;
  if (family == "F" || family == "f") {
    t = compute_F(d, n);
  } else if (family == "sharp") {
    t = compute_sharp(d, n);
  } else if (family == "star") {
    int jmax = static_cast<int>(std::stoll(f.get_or("jmax", "4")));
    t = compute_star(d, n, jmax);
    extra["jmax"] = jmax;
  } else {
    throw Error("BadInput", "unknown family '" + family + "' (F | sharp | star)");
  }
  Output o;
  o.json = std::move(extra);
  o.json["family"] = family;
  o.json["n"] = n;
  o.json["raw"] = json_of(d, t, StalkMode::Raw);
  o.json["renormalized"] = json_of(d, t, StalkMode::Renormalized);
  auto perv = perversity_check(d, t);
  Json jperv = Json::array();
  for (const auto& row : perv.rows)
    jperv.push_back(Json{{"stratum", row.stratum.display},
                         {"max_degree", row.max_degree},
                         {"bound", row.bound},
                         {"within", row.within}});
  o.json["perversity_left_half"] = jperv;

  o.table.header = {"mode", "stratum", "degree", "label"};
  for (auto mode : {StalkMode::Raw, StalkMode::Renormalized}) {
    StalkTable view = mode == StalkMode::Raw ? t : renormalize(d, t);
    std::string ms = mode == StalkMode::Raw ? "raw" : "ren";
    for (const auto& [b, degs] : view.entries)
      for (const auto& [deg, labels] : degs)
        for (const auto& [l, m] : labels)
          for (Int k = 0; k < m; ++k)
            o.table.rows.push_back({ms, b.display, std::to_string(deg), l.display()});
  }
  o.pretty = t.name + "  (" + t.component + ")\n";
  StalkTable ren = renormalize(d, t);
  for (const auto& [b, degs] : ren.entries) {
    o.pretty += "  " + b.display + ":";
    for (const auto& [deg, labels] : degs)
      for (const auto& [l, m] : labels)
        for (Int k = 0; k < m; ++k)
          o.pretty += "  " + l.display() + "[" + std::to_string(-deg) + "]";
    o.pretty += "\n";
  }
  if (t.truncated) o.pretty += "  (truncated above b_" + std::to_string(t.window_top) + ")\n";
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for Kottwitz sets, toral L-parameters, and K0 bookkeeping"};
  app.require_subcommand(0, 1);
  std::deque<Flags> store;
  std::map<std::string, std::pair<Flags*, std::function<Output(const Flags&)>>> dispatch;

  auto add = [&](const std::string& name, const std::string& desc,
                 std::function<Output(const Flags&)> fn) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    Flags& f = add_flags(cmd, store);
    dispatch[name] = {&f, std::move(fn)};
  };

  add("root-datum", "build a root datum and report its invariants", cmd_root_datum);
  add("weyl", "enumerate the Weyl group", cmd_weyl);
  add("tensor", "decompose a tensor product of irreducibles", cmd_tensor);
  add("parabolic-filtration", "grade an irreducible by a parabolic", cmd_parabolic_filtration);
  add("bg-enum", "enumerate B(G) inside a slope window", cmd_bg_enum);
  add("newton-order", "compare two classes in the Newton order", cmd_newton_order);
  add("strata-poset", "Hasse diagram of a B(G) window", cmd_strata_poset);
  add("param-check", "genericity and generousness of a toral parameter", cmd_param_check);
  add("vogan-fiber", "orbits of the Vogan variety (u = 1)", cmd_vogan_fiber);
  add("full-fiber", "orbits of the full fiber over x_phi", cmd_full_fiber);
  add("bmo", "BM-O pair for a trivial or generous-toral parameter", cmd_bmo);
  add("hecke", "Hecke decomposition at a generous toral parameter", cmd_hecke);
  add("eigensheaf", "eigensheaf summands over a finite window", cmd_eigensheaf);
  add("k0-expand", "alternating Weyl-sum expansion of [F_{lambda+2rho}]", cmd_k0_expand);
  add("k0-hecke", "K0-level Hecke operator at the trivial parameter", cmd_k0_hecke);
  add("k0-verify", "gamma checks on a PGL(2) trivial-parameter window", cmd_k0_verify);
  add("pgl2-stalks", "PGL(2) stalk tables for the F/sharp/star families", cmd_pgl2_stalks);

  std::vector<std::string> argv = args;
  try {
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::string chosen;
  for (const auto& [name, entry] : dispatch)
    if (app.get_subcommand(name)->parsed()) chosen = name;
  if (chosen.empty()) {
    out << app.help();
    return 2;
  }

  auto& [flags, fn] = dispatch[chosen];
  try {
    flags->load();
    Output o = fn(*flags);
    emit(out, o, flags->format);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Json j;
    j["error"] = e.code();
    j["message"] = e.what();
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace wb::cli
