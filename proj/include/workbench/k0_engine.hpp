#pragma once

#include <map>
#include <string>
#include <vector>

#include "workbench/stalk_engine.hpp"

namespace wb {

enum class K0Basis { Shriek, Sharp, HadalIrreducible };
std::string to_string(K0Basis b);

// Finitely supported integer vector over atomic classes.
struct K0Vector {
  std::map<AtomicClass, Int> coeffs;
  K0Basis basis_tag = K0Basis::Shriek;

  void add(const AtomicClass& c, Int v);
  Int signed_mass() const;
  Int positive_mass() const;  // sum of coefficients, all required positive by callers
  bool operator==(const K0Vector& o) const {
    return coeffs == o.coeffs && basis_tag == o.basis_tag;
  }
};

// [F_{lambda+2rho}] = sum_W (-1)^{l(w)} [i_{b_dom(lambda+rho+w rho)!} pi].
// `target` = lambda + 2rho_check in X_*; error NotInShiftedCone when
// target - 2rho_check is not dominant.
K0Vector alternating_expansion(const RootDatum& d, const IntVec& target);

// K0-level Hecke operator at the trivial parameter:
// [V (x) A_lambda] = sum_{mu in wt(V)} [A_dom(lambda+mu)].
K0Vector hecke_k0_trivial(const RootDatum& d, const IntVec& lambda, const IntVec& v_highest_weight);

struct GammaReport {
  bool star_left_inverse = false;  // gamma^* . gamma_! = id
  bool shriek_equals_sharp = false;
  bool positivity = false;  // shriek classes have nonnegative hadal coefficients
  std::vector<std::string> notes;
  bool ok() const { return star_left_inverse && shriek_equals_sharp; }
};

// K0 block over a finite PGL(2) trivial-parameter window b_0..b_N.
struct K0Block {
  std::vector<AtomicClass> classes;
  Mat gamma_shriek;  // identity in the shriek basis, by definition
  Mat gamma_sharp;   // stalk Euler characteristics of the sharp family
  Mat gamma_star;    // stalk Euler characteristics of the shriek family
  std::vector<std::string> warnings;
};

// Builds the block from stalk tables.  Error WindowNotClosed if the window
// misses a class below one of its members.
K0Block build_block(const RootDatum& pgl2, int max_n);
GammaReport verify_gamma(const RootDatum& pgl2, const K0Block& block);

// K0 class of a stalk table, read off stratumwise through gamma^*.
K0Vector k0_class_of(const RootDatum& d, const StalkTable& t);

// Basis conversion on a PGL(2) window: [F_n] = [i_n] - [i_{n-2}].
K0Vector to_hadal(const RootDatum& pgl2, const K0Vector& v, int max_n);
K0Vector from_hadal(const RootDatum& pgl2, const K0Vector& v, int max_n);

std::string display(const K0Vector& v);

}  // namespace wb
