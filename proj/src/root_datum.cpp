#include "workbench/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "workbench/error.hpp"

namespace wb {

Rat RootDatum::pair(const RatVec& x, const RatVec& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (pairing_matrix(i, j) != 0) s += x[i] * Rat(pairing_matrix(i, j)) * y[j];
  return s;
}

Int RootDatum::pair(const IntVec& x, const IntVec& y) const {
  Int s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += x[i] * pairing_matrix(i, j) * y[j];
  return s;
}

Int RootDatum::cartan(int i, int j) const { return pair(simple_roots[i], simple_coroots[j]); }

bool RootDatum::is_dominant_weight(const IntVec& v) const {
  for (const auto& cv : simple_coroots)
    if (pair(v, cv) < 0) return false;
  return true;
}

bool RootDatum::is_dominant_coweight(const RatVec& v) const {
  for (const auto& r : simple_roots)
    if (pair(to_rat(r), v) < 0) return false;
  return true;
}

IntVec RootDatum::reflect_weight(int i, const IntVec& v) const {
  Int c = pair(v, simple_coroots[i]);
  IntVec r = v;
  for (int k = 0; k < rank; ++k) r[k] -= c * simple_roots[i][k];
  return r;
}

RatVec RootDatum::reflect_coweight(int i, const RatVec& v) const {
  Rat c = pair(to_rat(simple_roots[i]), v);
  RatVec r = v;
  for (int k = 0; k < rank; ++k) r[k] -= c * Rat(simple_coroots[i][k]);
  return r;
}

Mat RootDatum::simple_reflection_on_chars(int i) const {
  Mat m = Mat::identity(rank);
  for (int col = 0; col < rank; ++col) {
    IntVec e(rank, 0);
    e[col] = 1;
    IntVec r = reflect_weight(i, e);
    for (int row = 0; row < rank; ++row) m(row, col) = r[row];
  }
  return m;
}

Mat RootDatum::simple_reflection_on_cochars(int i) const {
  Mat m = Mat::identity(rank);
  for (int col = 0; col < rank; ++col) {
    RatVec e(rank, Rat(0));
    e[col] = 1;
    RatVec r = reflect_coweight(i, e);
    for (int row = 0; row < rank; ++row) m(row, col) = r[row].numerator();
  }
  return m;
}

WeylElement RootDatum::identity_element() const {
  return WeylElement{{}, Mat::identity(rank), Mat::identity(rank)};
}

RootDatum RootDatum::dual() const {
  RootDatum d;
  d.rank = rank;
  d.simple_roots = simple_coroots;
  d.simple_coroots = simple_roots;
  d.pairing_matrix = pairing_matrix.transpose();
  d.preset_name = preset_name.empty() ? "dual" : preset_name + "-dual";
  d.basis_names.resize(rank);
  for (int i = 0; i < rank; ++i) d.basis_names[i] = "f" + std::to_string(i + 1);
  d.positive_roots = positive_coroots;
  d.positive_coroots = positive_roots;
  d.two_rho = two_rho_check;
  d.two_rho_check = two_rho;
  return d;
}

std::string RootDatum::tag() const { return preset_name + "#" + std::to_string(rank); }

std::string RootDatum::cache_key() const {
  std::string s = tag();
  for (const auto& r : simple_roots) s += "r" + to_string(r);
  for (const auto& c : simple_coroots) s += "c" + to_string(c);
  s += "p";
  for (Int x : pairing_matrix.a) s += std::to_string(x) + ",";
  return s;
}

namespace {

// Closure of the simple roots under simple reflections, tracked in
// simple-root coordinates so positivity is a sign check.
void enumerate_positive_roots(RootDatum& d) {
  int m = d.ssrank();
  struct Entry {
    IntVec root, coroot, coords;
  };
  std::vector<Entry> out;
  std::set<IntVec> seen;
  for (int i = 0; i < m; ++i) {
    IntVec c(m, 0);
    c[i] = 1;
    out.push_back({d.simple_roots[i], d.simple_coroots[i], c});
    seen.insert(c);
  }
  for (size_t head = 0; head < out.size(); ++head) {
    if (out.size() > 100000) throw Error("InvalidCartan", "positive root system does not close up (non-finite type?)");
    Entry e = out[head];
    for (int i = 0; i < m; ++i) {
      Int c = d.pair(e.root, d.simple_coroots[i]);
      IntVec coords = e.coords;
      coords[i] -= c * 1;  // s_i in simple-root coordinates shifts the i-th coefficient
      // general rule: coords of s_i(beta) = coords(beta) - <beta, alpha_i^vee> e_i
      bool nonneg = true;
      for (Int x : coords) nonneg &= (x >= 0);
      if (!nonneg || seen.count(coords)) continue;
      IntVec root = e.root;
      IntVec coroot = e.coroot;
      root = d.reflect_weight(i, root);
      Int cc = d.pair(d.simple_roots[i], e.coroot);
      for (int k = 0; k < d.rank; ++k) coroot[k] -= cc * d.simple_coroots[i][k];
      seen.insert(coords);
      out.push_back({root, coroot, coords});
    }
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.coords < b.coords; });
  d.two_rho.assign(d.rank, 0);
  d.two_rho_check.assign(d.rank, 0);
  for (const auto& e : out) {
    d.positive_roots.push_back(e.root);
    d.positive_coroots.push_back(e.coroot);
    d.two_rho = d.two_rho + e.root;
    d.two_rho_check = d.two_rho_check + e.coroot;
  }
}

void validate_datum(const RootDatum& d) {
  int m = d.ssrank();
  if (static_cast<int>(d.simple_coroots.size()) != m)
    throw Error("InvalidCartan", "root/coroot count mismatch");
  for (const auto& v : d.simple_roots)
    if (static_cast<int>(v.size()) != d.rank) throw Error("InvalidCartan", "root of wrong length");
  for (const auto& v : d.simple_coroots)
    if (static_cast<int>(v.size()) != d.rank) throw Error("InvalidCartan", "coroot of wrong length");
  for (int i = 0; i < m; ++i) {
    if (d.cartan(i, i) != 2) throw Error("InvalidCartan", "diagonal pairing != 2");
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Int cij = d.cartan(i, j);
      if (cij > 0) throw Error("InvalidCartan", "positive off-diagonal pairing");
      if ((cij == 0) != (d.cartan(j, i) == 0))
        throw Error("InvalidCartan", "asymmetric zero pattern");
    }
  }
  if (rational_rank(d.simple_roots) != m)
    throw Error("InvalidCartan", "simple roots linearly dependent");
  if (rational_rank(d.simple_coroots) != m)
    throw Error("InvalidCartan", "simple coroots linearly dependent");
}

IntVec unit(int n, int i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

RootDatum preset_gl(int n) {
  RootDatum d;
  d.rank = n;
  d.preset_name = "GL(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i) d.basis_names.push_back("e" + std::to_string(i + 1));
  d.pairing_matrix = Mat::identity(n);
  for (int i = 0; i + 1 < n; ++i) {
    IntVec r = unit(n, i);
    r[i + 1] = -1;
    d.simple_roots.push_back(r);
    d.simple_coroots.push_back(r);
  }
  return d;
}

// A_{n-1} Cartan matrix entry
Int cartan_a(int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); }

RootDatum preset_sl(int n) {
  // X* in fundamental-weight coordinates, X_* in simple-coroot coordinates.
  RootDatum d;
  int m = n - 1;
  d.rank = m;
  d.preset_name = "SL(" + std::to_string(n) + ")";
  for (int i = 0; i < m; ++i) d.basis_names.push_back("w" + std::to_string(i + 1));
  d.pairing_matrix = Mat::identity(m);
  for (int i = 0; i < m; ++i) {
    IntVec root(m, 0);
    for (int j = 0; j < m; ++j) root[j] = cartan_a(i, j);
    d.simple_roots.push_back(root);
    d.simple_coroots.push_back(unit(m, i));
  }
  return d;
}

RootDatum preset_pgl(int n) {
  // X* in simple-root coordinates, X_* in fundamental-coweight coordinates.
  RootDatum d;
  int m = n - 1;
  d.rank = m;
  d.preset_name = "PGL(" + std::to_string(n) + ")";
  for (int i = 0; i < m; ++i) d.basis_names.push_back("a" + std::to_string(i + 1));
  d.pairing_matrix = Mat::identity(m);
  for (int i = 0; i < m; ++i) {
    d.simple_roots.push_back(unit(m, i));
    IntVec coroot(m, 0);
    for (int j = 0; j < m; ++j) coroot[j] = cartan_a(j, i);
    d.simple_coroots.push_back(coroot);
  }
  return d;
}

RootDatum preset_sp4() {
  // X* = Z^2 with short root e1-e2 and long root 2e2.
  RootDatum d;
  d.rank = 2;
  d.preset_name = "Sp(4)";
  d.basis_names = {"e1", "e2"};
  d.pairing_matrix = Mat::identity(2);
  d.simple_roots = {{1, -1}, {0, 2}};
  d.simple_coroots = {{1, -1}, {0, 1}};
  return d;
}

RootDatum preset_gsp4() {
  // Torus diag(t1, t2, c/t2, c/t1); basis (e1, e2, e0) with e0 the similitude.
  RootDatum d;
  d.rank = 3;
  d.preset_name = "GSp(4)";
  d.basis_names = {"e1", "e2", "e0"};
  d.pairing_matrix = Mat::identity(3);
  d.simple_roots = {{1, -1, 0}, {0, 2, -1}};
  d.simple_coroots = {{1, -1, 0}, {0, 1, 0}};
  return d;
}

std::string normalize_preset(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return t;
}

}  // namespace

RootDatum build_root_datum(int rank, std::vector<IntVec> simple_roots,
                           std::vector<IntVec> simple_coroots, Mat pairing, std::string name,
                           std::vector<std::string> basis_names) {
  RootDatum d;
  d.rank = rank;
  d.simple_roots = std::move(simple_roots);
  d.simple_coroots = std::move(simple_coroots);
  d.pairing_matrix = std::move(pairing);
  d.preset_name = std::move(name);
  d.basis_names = std::move(basis_names);
  if (d.basis_names.empty())
    for (int i = 0; i < rank; ++i) d.basis_names.push_back("x" + std::to_string(i + 1));
  validate_datum(d);
  enumerate_positive_roots(d);
  return d;
}

RootDatum build_root_datum(const std::string& preset) {
  std::string p = normalize_preset(preset);
  bool dual = false;
  if (p.size() > 5 && p.substr(p.size() - 5) == "-DUAL") {
    dual = true;
    p = p.substr(0, p.size() - 5);
  }
  auto parse_n = [&](const std::string& head) -> int {
    std::string rest = p.substr(head.size());
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty()) throw Error("UnknownPreset", "missing rank in '" + preset + "'");
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("UnknownPreset", "bad rank in '" + preset + "'");
    return std::stoi(rest);
  };
  RootDatum d;
  if (p == "SP4" || p == "SP(4)") {
    d = preset_sp4();
  } else if (p == "GSP4" || p == "GSP(4)") {
    d = preset_gsp4();
  } else if (p.rfind("GL", 0) == 0 && p.rfind("GSP", 0) != 0) {
    int n = parse_n("GL");
    if (n < 1) throw Error("UnknownPreset", "GL(n) needs n >= 1");
    d = preset_gl(n);
  } else if (p.rfind("SL", 0) == 0) {
    int n = parse_n("SL");
    if (n < 2) throw Error("UnknownPreset", "SL(n) needs n >= 2");
    d = preset_sl(n);
  } else if (p.rfind("PGL", 0) == 0) {
    int n = parse_n("PGL");
    if (n < 2) throw Error("UnknownPreset", "PGL(n) needs n >= 2");
    d = preset_pgl(n);
  } else {
    throw Error("UnknownPreset", "'" + preset + "'");
  }
  validate_datum(d);
  enumerate_positive_roots(d);
  return dual ? d.dual() : d;
}

namespace {

// Peels a canonical reduced word off a Weyl group element: take the least i
// with l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0, tested against the regular
// coweight 2rho_check via <alpha_i, w nu> < 0.
std::vector<int> canonical_reduced_word(const RootDatum& d, Mat on_chars, Mat on_cochars) {
  std::vector<int> left;  // w = s_{left[0]} s_{left[1]} ...
  Mat id = Mat::identity(d.rank);
  while (!(on_chars == id)) {
    int found = -1;
    IntVec wnu = on_cochars * d.two_rho_check;
    for (int i = 0; i < d.ssrank(); ++i) {
      if (d.pair(d.simple_roots[i], wnu) < 0) {
        found = i;
        break;
      }
    }
    if (found < 0) throw Error("InternalError", "reduced-word peeling stuck");
    left.push_back(found);
    on_chars = d.simple_reflection_on_chars(found) * on_chars;
    on_cochars = d.simple_reflection_on_cochars(found) * on_cochars;
  }
  return left;
}

}  // namespace

DominantWeight dominant_rep(const RootDatum& d, const IntVec& v) {
  IntVec cur = v;
  Mat chars = Mat::identity(d.rank), cochars = Mat::identity(d.rank);
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.ssrank(); ++i) {
      if (d.pair(cur, d.simple_coroots[i]) < 0) {
        cur = d.reflect_weight(i, cur);
        chars = d.simple_reflection_on_chars(i) * chars;
        cochars = d.simple_reflection_on_cochars(i) * cochars;
        word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  WeylElement w{canonical_reduced_word(d, chars, cochars), chars, cochars};
  return {cur, w};
}

DominantCoweight dominant_rep_coweight(const RootDatum& d, const RatVec& v) {
  RatVec cur = v;
  Mat chars = Mat::identity(d.rank), cochars = Mat::identity(d.rank);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.ssrank(); ++i) {
      if (d.pair(to_rat(d.simple_roots[i]), cur) < 0) {
        cur = d.reflect_coweight(i, cur);
        chars = d.simple_reflection_on_chars(i) * chars;
        cochars = d.simple_reflection_on_cochars(i) * cochars;
        moved = true;
        break;
      }
    }
  }
  WeylElement w{canonical_reduced_word(d, chars, cochars), chars, cochars};
  return {cur, w};
}

SignedDominant dominant_rep_signed(const RootDatum& d, IntVec v) {
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.ssrank(); ++i) {
      Int c = d.pair(v, d.simple_coroots[i]);
      if (c < 0) {
        for (int k = 0; k < d.rank; ++k) v[k] -= c * d.simple_roots[i][k];
        sign = -sign;
        moved = true;
        break;
      }
    }
  }
  return {std::move(v), sign};
}

IntVec dominant_coweight_vector(const RootDatum& d, RatVec v) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.ssrank(); ++i) {
      Rat c = d.pair(to_rat(d.simple_roots[i]), v);
      if (c < Rat(0)) {
        for (int k = 0; k < d.rank; ++k) v[k] -= c * Rat(d.simple_coroots[i][k]);
        moved = true;
        break;
      }
    }
  }
  return to_int(v);
}

std::vector<WeylElement> weyl_group(const RootDatum& d, size_t cap) {
  std::vector<WeylElement> out;
  std::set<std::vector<Int>> seen;
  out.push_back(d.identity_element());
  seen.insert(out[0].on_chars.a);
  std::vector<Mat> gen_chars, gen_cochars;
  for (int i = 0; i < d.ssrank(); ++i) {
    gen_chars.push_back(d.simple_reflection_on_chars(i));
    gen_cochars.push_back(d.simple_reflection_on_cochars(i));
  }
  for (size_t head = 0; head < out.size(); ++head) {
    WeylElement w = out[head];
    for (int i = 0; i < d.ssrank(); ++i) {
      Mat nc = gen_chars[i] * w.on_chars;
      if (seen.count(nc.a)) continue;
      if (out.size() >= cap) throw Error("GroupTooLarge", "Weyl group exceeds enumeration guard");
      seen.insert(nc.a);
      std::vector<int> word = w.word;
      word.insert(word.begin(), i);  // BFS layering: new length = old + 1, word reduced
      out.push_back(WeylElement{word, nc, gen_cochars[i] * w.on_cochars});
    }
  }
  return out;
}

WeylElement longest_element(const RootDatum& d) {
  auto w = weyl_group(d);
  size_t n_pos = d.positive_roots.size();
  WeylElement* best = nullptr;
  for (auto& e : w) {
    if (e.word.size() == n_pos) {
      if (best) throw Error("InternalError", "longest element not unique");
      best = &e;
    }
  }
  if (!best) throw Error("InternalError", "no longest element found");
  return *best;
}

bool dominance_leq(const RootDatum& d, const RatVec& nu, const RatVec& nu_prime) {
  if (!d.is_dominant_coweight(nu) || !d.is_dominant_coweight(nu_prime))
    throw Error("NotDominant", "dominance_leq requires dominant arguments");
  RatVec diff = nu_prime - nu;
  auto c = solve_in_span(d.simple_coroots, diff);
  if (!c) return false;
  for (const auto& x : *c)
    if (x < 0) return false;
  return true;
}

}  // namespace wb
