#include "workbench/k0_engine.hpp"

#include <algorithm>

#include "workbench/error.hpp"

namespace wb {

std::string to_string(K0Basis b) {
  switch (b) {
    case K0Basis::Shriek:
      return "shriek";
    case K0Basis::Sharp:
      return "sharp";
    case K0Basis::HadalIrreducible:
      return "hadal_irreducible";
  }
  return "?";
}

void K0Vector::add(const AtomicClass& c, Int v) {
  if (v == 0) return;
  auto it = coeffs.find(c);
  if (it == coeffs.end()) {
    coeffs.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) coeffs.erase(it);
  }
}

Int K0Vector::signed_mass() const {
  Int s = 0;
  for (const auto& [c, v] : coeffs) s += v;
  return s;
}

Int K0Vector::positive_mass() const {
  Int s = 0;
  for (const auto& [c, v] : coeffs) {
    if (v < 0) throw Error("InternalError", "negative coefficient where positivity is required");
    s += v;
  }
  return s;
}

std::string display(const K0Vector& v) {
  if (v.coeffs.empty()) return "0";
  std::string s;
  for (const auto& [c, coeff] : v.coeffs) {
    if (!s.empty()) s += coeff >= 0 ? " + " : " - ";
    else if (coeff < 0) s += "-";
    Int a = coeff < 0 ? -coeff : coeff;
    if (a != 1) s += std::to_string(a) + "*";
    s += "[i_{" + c.b.display + "!} " + c.pi.display() + "]";
  }
  return s;
}

K0Vector alternating_expansion(const RootDatum& d, const IntVec& target) {
  IntVec lambda = target - d.two_rho_check;
  if (!d.is_dominant_coweight(to_rat(lambda)))
    throw Error("NotInShiftedCone", "target - 2rho_check = " + to_string(lambda) + " not dominant");
  K0Vector out;
  out.basis_tag = K0Basis::Shriek;
  auto wgroup = weyl_group(d);
  for (const auto& w : wgroup) {
    // mu = lambda + rho_check + w(rho_check); rho_check + w(rho_check) is
    // integral because rho_check - w(rho_check) is a sum of coroots
    IntVec two_mu = lambda + lambda + d.two_rho_check + w.on_cochars * d.two_rho_check;
    IntVec mu(d.rank);
    for (int i = 0; i < d.rank; ++i) {
      if (two_mu[i] % 2 != 0) throw Error("InternalError", "rho_check shift not integral");
      mu[i] = two_mu[i] / 2;
    }
    IntVec dom = dominant_coweight_vector(d, to_rat(mu));
    out.add(bmo_trivial(d, dom), w.sign());
  }
  return out;
}

K0Vector hecke_k0_trivial(const RootDatum& d, const IntVec& lambda, const IntVec& v_highest_weight) {
  if (!d.is_dominant_coweight(to_rat(lambda)))
    throw Error("NotDominant", "lambda " + to_string(lambda));
  RootDatum dual = d.dual();
  const WeightMultiset& wt = weight_multiplicities(dual, v_highest_weight);
  K0Vector out;
  out.basis_tag = K0Basis::Shriek;
  for (const auto& [mu, mult] : wt.entries()) {
    IntVec dom = dominant_coweight_vector(d, to_rat(lambda + mu));
    out.add(bmo_trivial(d, dom), mult);
  }
  for (const auto& [c, v] : out.coeffs)
    if (v <= 0) throw Error("InternalError", "nonpositive Hecke coefficient");
  return out;
}

namespace {

std::vector<AtomicClass> window_classes(const RootDatum& pgl2, int max_n) {
  std::vector<AtomicClass> out;
  for (int m = 0; m <= max_n; ++m) out.push_back(bmo_trivial(pgl2, IntVec{m}));
  return out;
}

}  // namespace

K0Vector k0_class_of(const RootDatum& d, const StalkTable& t) {
  StalkTable ren = renormalize(d, t);
  K0Vector out;
  out.basis_tag = K0Basis::Shriek;
  for (const auto& [b, degs] : ren.entries) {
    (void)degs;
    AtomicClass cls = bmo_trivial(d, to_int(b.newton));
    if (!(cls.b == b))
      throw Error("BadInput", "stratum " + b.display + " carries no trivial-parameter class");
    for (const auto& [label, chi] : ren.euler(b)) {
      if (!(label.rep == cls.pi) || label.delta_twist)
        throw Error("BadInput", "stalk label " + label.display() + " is not the BM-O label at " + b.display);
      out.add(cls, chi);
    }
  }
  return out;
}

K0Block build_block(const RootDatum& pgl2, int max_n) {
  if (max_n < 1) throw Error("WindowNotClosed", "window must contain b_0 and b_1");
  K0Block block;
  block.classes = window_classes(pgl2, max_n);
  int n = static_cast<int>(block.classes.size());
  block.gamma_shriek = Mat::identity(n);
  block.gamma_sharp = Mat(n, n);
  block.gamma_star = Mat(n, n);
  auto index_of = [&](const AtomicClass& c) {
    for (int i = 0; i < n; ++i)
      if (block.classes[i] == c) return i;
    throw Error("WindowNotClosed", "class " + c.display() + " escapes the window");
  };
  for (int col = 0; col < n; ++col) {
    StalkTable sharp = compute_sharp(pgl2, col);
    for (const auto& [c, v] : k0_class_of(pgl2, sharp).coeffs) block.gamma_sharp(index_of(c), col) = v;
    StalkTable shriek = seed_shriek(pgl2, block.classes[col].b, block.classes[col].pi);
    for (const auto& [c, v] : k0_class_of(pgl2, shriek).coeffs) block.gamma_star(index_of(c), col) = v;
  }
  return block;
}

GammaReport verify_gamma(const RootDatum& pgl2, const K0Block& block) {
  GammaReport rep;
  int n = static_cast<int>(block.classes.size());
  rep.star_left_inverse = (block.gamma_star * block.gamma_shriek == Mat::identity(n));
  rep.shriek_equals_sharp = (block.gamma_shriek == block.gamma_sharp);
  rep.notes.push_back(rep.star_left_inverse ? "gamma^* . gamma_! = id" : "gamma^* . gamma_! != id");
  rep.notes.push_back(rep.shriek_equals_sharp ? "gamma_! = gamma_sharp on the window"
                                              : "gamma_! != gamma_sharp on the window");
  // positivity of the hadal expansion of each shriek class
  rep.positivity = true;
  int max_n = n - 1;
  for (const auto& cls : block.classes) {
    K0Vector v;
    v.add(cls, 1);
    K0Vector h = to_hadal(pgl2, v, max_n);
    for (const auto& [c, coeff] : h.coeffs)
      if (coeff < 0) rep.positivity = false;
  }
  rep.notes.push_back(rep.positivity ? "hadal expansions of shriek classes are nonnegative"
                                     : "negative hadal coefficient found");
  return rep;
}

K0Vector to_hadal(const RootDatum& pgl2, const K0Vector& v, int max_n) {
  if (v.basis_tag != K0Basis::Shriek) throw Error("BadInput", "expected shriek basis");
  // invert [F_n] = [i_n] - [i_{n-2}]: [i_n] = sum_{k>=0} [F_{n-2k}]
  K0Vector out;
  out.basis_tag = K0Basis::HadalIrreducible;
  for (const auto& [c, coeff] : v.coeffs) {
    Int m = c.b.newton[0].numerator();
    if (m > max_n)
      throw Error("WindowNotClosed", "class " + c.display() + " escapes the window");
    for (Int k = m; k >= 0; k -= 2) out.add(bmo_trivial(pgl2, IntVec{k}), coeff);
  }
  return out;
}

K0Vector from_hadal(const RootDatum& pgl2, const K0Vector& v, int max_n) {
  if (v.basis_tag != K0Basis::HadalIrreducible) throw Error("BadInput", "expected hadal basis");
  K0Vector out;
  out.basis_tag = K0Basis::Shriek;
  for (const auto& [c, coeff] : v.coeffs) {
    Int m = c.b.newton[0].numerator();
    if (m > max_n)
      throw Error("WindowNotClosed", "class " + c.display() + " escapes the window");
    out.add(bmo_trivial(pgl2, IntVec{m}), coeff);
    if (m >= 2) out.add(bmo_trivial(pgl2, IntVec{m - 2}), -coeff);
  }
  return out;
}

}  // namespace wb
