#pragma once

#include <map>
#include <string>
#include <vector>

#include "workbench/kottwitz.hpp"
#include "workbench/parameters.hpp"
#include "workbench/rep_theory.hpp"

namespace wb {

// Inert term language for representation labels; never an actual smooth
// representation.  Matching is syntactic: PiLambda(0) and TrivialRep stay
// distinct even where the representations they name coincide.
struct RepLabel {
  enum class Kind { Trivial, Char, NormInd, PiLambda, Delta12, Dual };
  Kind kind = Kind::Trivial;
  Character chr;                              // Char
  std::vector<std::vector<Character>> blocks;  // NormInd: slope blocks, chars in input order
  IntVec lambda;                               // PiLambda
  std::vector<int> levi;                       // PiLambda: centralizer simple roots
  int levi_ssrank = 0;                         // PiLambda: ssrank of the ambient datum
  std::vector<RepLabel> inner;                 // Dual payload

  static RepLabel trivial();
  static RepLabel character(const Character& c);
  static RepLabel normalized_induction(std::vector<std::vector<Character>> blocks);
  static RepLabel pi_lambda(const IntVec& lambda, std::vector<int> levi, int ambient_ssrank);
  static RepLabel delta12();
  static RepLabel dual(RepLabel inner);

  std::string key() const;      // canonical form, drives ordering and equality
  std::string display() const;  // human form, e.g. "i_B^G(1)"

  bool operator<(const RepLabel& o) const { return key() < o.key(); }
  bool operator==(const RepLabel& o) const { return key() == o.key(); }
};

// The character prod_s chi_s^{e_s} * |.|^twist of the Weil group.
struct GaloisMonomial {
  std::map<std::string, Int> exponents;
  Int twist = 0;

  static GaloisMonomial one() { return {}; }
  GaloisMonomial& multiply(const Character& c, Int power);
  std::string display() const;
  bool operator==(const GaloisMonomial& o) const {
    return exponents == o.exponents && twist == o.twist;
  }
};

// K0 basis symbol [i_{b!}^ren pi].
struct AtomicClass {
  BClass b;
  RepLabel pi;

  std::string display() const { return "(" + b.display + ", " + pi.display() + ")"; }
  bool operator<(const AtomicClass& o) const {
    if (!(b == o.b)) return b < o.b;
    return pi < o.pi;
  }
  bool operator==(const AtomicClass& o) const { return b == o.b && pi == o.pi; }
};

// BM-O pair at the trivial parameter: b_lambda with pi_lambda = i_B^{G_b}(1).
// Error NotDominant.
AtomicClass bmo_trivial(const RootDatum& d, const IntVec& lambda);

// BM-O pair at a generous toral parameter for GL(n), j in Z^n = Irr(S_phi).
// Errors: NotGenerous, BadInput on dimension mismatch.
AtomicClass bmo_generous_toral(const ToralParameter& phi, const IntVec& j);

struct HeckeTerm {
  AtomicClass cls;
  GaloisMonomial monomial;
  Int multiplicity;
  IntVec weight;  // the weight of V producing this term
};

// T_V on i_{b_j!}^ren pi_j for generous toral phi: one term per weight of V
// (V given by its dominant highest weight for the dual GL(n)).
std::vector<HeckeTerm> hecke_generous(const ToralParameter& phi, const IntVec& j,
                                      const IntVec& v_highest_weight);

struct EigensheafReport {
  std::vector<AtomicClass> classes;  // each with multiplicity 1 for toral generous phi
  Int window;
  bool truncated = true;
};
EigensheafReport eigensheaf_multiset(const ToralParameter& phi, Int window);

// Shared GL(n) datum for a parameter of size n.
const RootDatum& gl_datum(int n);

}  // namespace wb
