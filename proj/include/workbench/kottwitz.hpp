#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/root_datum.hpp"

namespace wb {

// Element of B(G) for split G, as a validated (Newton point, Kottwitz class)
// pair.  kappa_nf is the invariant-factor normal form of the class in
// pi_1(G) = X_* / (coroot lattice); kappa_rep is an integral representative.
struct BClass {
  RatVec newton;
  IntVec kappa_nf;
  IntVec kappa_rep;
  std::string display;
  std::string datum_tag;

  bool operator<(const BClass& o) const {
    if (newton != o.newton) return newton < o.newton;
    return kappa_nf < o.kappa_nf;
  }
  bool operator==(const BClass& o) const { return newton == o.newton && kappa_nf == o.kappa_nf; }
};

// pi_1(G) bookkeeping derived from the Smith form of the coroot matrix.
struct Pi1 {
  SmithForm snf;  // of the matrix with columns the simple coroots
  int rank;       // of the ambient lattice

  IntVec normal_form(const IntVec& rep) const;
  // free coordinates of the class of a rational vector, when they are integral
  std::optional<IntVec> free_part(const RatVec& v) const;
  IntVec free_part_int(const IntVec& v) const;
  // all torsion-coset representatives with the given free part
  std::vector<IntVec> classes_with_free_part(const IntVec& free) const;
};
Pi1 pi1_data(const RootDatum& d);

// Validates all BClass invariants.  kappa is given by an integral
// representative in X_*.  Errors: NotDominant, KappaMismatch, NotIntegral.
BClass validate_bclass(const RootDatum& d, const RatVec& nu, const IntVec& kappa_rep);

// The unique valid kappa for nu if exactly one exists (always the case when
// pi_1(G) is torsion-free), otherwise nullopt.
std::optional<BClass> bclass_from_newton(const RootDatum& d, const RatVec& nu);

// All valid classes with max |slope coordinate| <= slope_bound and every
// coordinate denominator <= denom_bound, ordered by (nu lex, kappa nf).
std::vector<BClass> enumerate_bg(const RootDatum& d, const Rat& slope_bound, Int denom_bound);

// b <= b' iff b' specializes from b: equal kappa and nu_b <= nu_b' in
// dominance order.
bool newton_leq(const RootDatum& d, const BClass& b, const BClass& b_prime);

// I = { i : <alpha_i, nu_b> = 0 }
std::vector<int> centralizer_levi(const RootDatum& d, const BClass& b);

// <2 rho_G, nu_b>; error NonIntegralShift if the pairing is not an integer.
Int shift(const RootDatum& d, const BClass& b);

struct StrataPoset {
  std::vector<BClass> elements;
  std::vector<std::pair<int, int>> relation;        // all pairs (i,j) with e_i <= e_j
  std::vector<std::pair<int, int>> covering_edges;  // transitive reduction
  std::vector<int> minimal_elements;
};

StrataPoset strata_poset(const RootDatum& d, const std::vector<BClass>& classes);
std::vector<BClass> specializations(const BClass& b, const StrataPoset& p);
std::vector<BClass> generizations(const BClass& b, const StrataPoset& p);

bool is_basic(const RootDatum& d, const BClass& b);

}  // namespace wb
