#include "workbench/bmo_hecke.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "workbench/error.hpp"

namespace wb {

RepLabel RepLabel::trivial() { return RepLabel{}; }

RepLabel RepLabel::character(const Character& c) {
  RepLabel r;
  r.kind = Kind::Char;
  r.chr = c;
  return r;
}

RepLabel RepLabel::normalized_induction(std::vector<std::vector<Character>> blocks) {
  RepLabel r;
  r.kind = Kind::NormInd;
  r.blocks = std::move(blocks);
  return r;
}

RepLabel RepLabel::pi_lambda(const IntVec& lambda, std::vector<int> levi, int ambient_ssrank) {
  RepLabel r;
  r.kind = Kind::PiLambda;
  r.lambda = lambda;
  r.levi = std::move(levi);
  r.levi_ssrank = ambient_ssrank;
  return r;
}

RepLabel RepLabel::delta12() {
  RepLabel r;
  r.kind = Kind::Delta12;
  return r;
}

RepLabel RepLabel::dual(RepLabel inner) {
  RepLabel r;
  r.kind = Kind::Dual;
  r.inner.push_back(std::move(inner));
  return r;
}

std::string RepLabel::key() const {
  switch (kind) {
    case Kind::Trivial:
      return "1";
    case Kind::Char:
      return "c:" + chr.symbol + ":" + std::to_string(chr.twist);
    case Kind::NormInd: {
      std::string s = "ind";
      for (const auto& blk : blocks) {
        s += "[";
        for (const auto& c : blk) s += c.symbol + ":" + std::to_string(c.twist) + ";";
        s += "]";
      }
      return s;
    }
    case Kind::PiLambda: {
      std::string s = "pi" + to_string(lambda) + "L(";
      for (int i : levi) s += std::to_string(i) + ";";
      return s + ")";
    }
    case Kind::Delta12:
      return "d12";
    case Kind::Dual:
      return "dual(" + inner[0].key() + ")";
  }
  return "?";
}

std::string RepLabel::display() const {
  switch (kind) {
    case Kind::Trivial:
      return "1";
    case Kind::Char:
      return chr.display();
    case Kind::NormInd: {
      std::string s;
      for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += " x ";
        if (blocks[b].size() == 1) {
          s += blocks[b][0].display();
        } else {
          s += "i_B^{GL" + std::to_string(blocks[b].size()) + "}(";
          for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) s += " # ";
            s += blocks[b][i].display();
          }
          s += ")";
        }
      }
      return s;
    }
    case Kind::PiLambda: {
      if (levi.empty()) return "1";
      if (static_cast<int>(levi.size()) == levi_ssrank) return "i_B^G(1)";
      std::string s = "i_B^{Levi{";
      for (size_t i = 0; i < levi.size(); ++i) {
        if (i) s += ",";
        s += "a" + std::to_string(levi[i] + 1);
      }
      return s + "}}(1)";
    }
    case Kind::Delta12:
      return "delta^{1/2}";
    case Kind::Dual:
      return inner[0].display() + "^";
  }
  return "?";
}

GaloisMonomial& GaloisMonomial::multiply(const Character& c, Int power) {
  if (power == 0) return *this;
  exponents[c.symbol] += power;
  if (exponents[c.symbol] == 0) exponents.erase(c.symbol);
  twist += power * c.twist;
  return *this;
}

std::string GaloisMonomial::display() const {
  if (exponents.empty() && twist == 0) return "1";
  std::string s;
  for (const auto& [sym, e] : exponents) {
    if (!s.empty()) s += "*";
    s += "chi_" + sym;
    if (e != 1) s += "^" + std::to_string(e);
  }
  if (twist != 0) {
    if (!s.empty()) s += "*";
    s += "|.|^" + std::to_string(twist);
  }
  return s;
}

AtomicClass bmo_trivial(const RootDatum& d, const IntVec& lambda) {
  if (!d.is_dominant_coweight(to_rat(lambda)))
    throw Error("NotDominant", "lambda " + to_string(lambda));
  BClass b = validate_bclass(d, to_rat(lambda), lambda);
  if (b.display.rfind("nu=", 0) == 0) b.display = "b_" + to_string(lambda);
  std::vector<int> levi = centralizer_levi(d, b);
  RepLabel pi = levi.empty() ? RepLabel::trivial()
                             : RepLabel::pi_lambda(lambda, levi, d.ssrank());
  return {b, pi};
}

const RootDatum& gl_datum(int n) {
  thread_local std::map<int, RootDatum> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_root_datum("GL(" + std::to_string(n) + ")")).first;
  return it->second;
}

AtomicClass bmo_generous_toral(const ToralParameter& phi, const IntVec& j) {
  if (!is_generous(phi)) throw Error("NotGenerous", "parameter is not generous");
  int n = phi.n();
  if (static_cast<int>(j.size()) != n) throw Error("BadInput", "j has wrong length");
  const RootDatum& d = gl_datum(n);

  // slopes sorted descending; within a slope block characters keep input order
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return j[a] > j[b]; });
  RatVec nu(n);
  IntVec nu_int(n);
  for (int i = 0; i < n; ++i) {
    nu[i] = Rat(j[order[i]]);
    nu_int[i] = j[order[i]];
  }
  BClass b = validate_bclass(d, nu, nu_int);

  std::vector<std::vector<Character>> blocks;
  for (int i = 0; i < n;) {
    int k = i;
    std::vector<Character> blk;
    while (k < n && j[order[k]] == j[order[i]]) blk.push_back(phi.chars[order[k++]]);
    blocks.push_back(std::move(blk));
    i = k;
  }
  return {b, RepLabel::normalized_induction(std::move(blocks))};
}

std::vector<HeckeTerm> hecke_generous(const ToralParameter& phi, const IntVec& j,
                                      const IntVec& v_highest_weight) {
  if (!is_generous(phi)) throw Error("NotGenerous", "parameter is not generous");
  int n = phi.n();
  if (static_cast<int>(j.size()) != n) throw Error("BadInput", "j has wrong length");
  const RootDatum dual = gl_datum(n).dual();
  const WeightMultiset& wt = weight_multiplicities(dual, v_highest_weight);
  std::vector<HeckeTerm> out;
  for (const auto& [a, mult] : wt.entries()) {
    HeckeTerm term;
    term.weight = a;
    term.cls = bmo_generous_toral(phi, j + a);
    for (int i = 0; i < n; ++i) term.monomial.multiply(phi.chars[i], a[i]);
    term.multiplicity = mult;
    out.push_back(std::move(term));
  }
  return out;
}

EigensheafReport eigensheaf_multiset(const ToralParameter& phi, Int window) {
  if (!is_generous(phi)) throw Error("NotGenerous", "parameter is not generous");
  int n = phi.n();
  EigensheafReport rep;
  rep.window = window;
  IntVec j(n, -window);
  while (true) {
    rep.classes.push_back(bmo_generous_toral(phi, j));
    int i = 0;
    for (; i < n; ++i) {
      if (++j[i] <= window) break;
      j[i] = -window;
    }
    if (i == n) break;
  }
  std::sort(rep.classes.begin(), rep.classes.end());
  return rep;
}

}  // namespace wb
