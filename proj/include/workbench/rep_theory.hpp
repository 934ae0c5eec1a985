#pragma once

#include <map>
#include <string>
#include <vector>

#include "workbench/root_datum.hpp"

namespace wb {

// Weight multiset with positive multiplicities, kept sorted for determinism.
class WeightMultiset {
 public:
  void add(const IntVec& w, Int mult);
  Int mult(const IntVec& w) const;
  Int total_mass() const;
  bool empty() const {
    normalize();
    return entries_.empty();
  }
  size_t support_size() const {
    normalize();
    return entries_.size();
  }

  const std::vector<std::pair<IntVec, Int>>& entries() const {
    normalize();
    return entries_;
  }

  // largest support element under (height w.r.t. 2rho_check, lex) order
  IntVec max_weight(const RootDatum& d) const;

  void subtract(const WeightMultiset& other, Int mult);  // throws on negative
  static WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b);

  bool operator==(const WeightMultiset& o) const {
    normalize();
    o.normalize();
    return entries_ == o.entries_;
  }

 private:
  void normalize() const;
  mutable std::vector<std::pair<IntVec, Int>> entries_;  // sorted by weight, mults > 0
  mutable bool dirty_ = false;
};

struct LeviFiltration {
  struct Level {
    Rat pairing_value;
    Int dim;
    std::vector<std::pair<IntVec, Int>> levi_irreps;  // (Levi highest weight, multiplicity)
  };
  std::vector<Level> levels;  // increasing pairing_value
  std::vector<int> levi_roots;
};

// Weyl dimension formula.  Error NotDominant.
Int weyl_dim(const RootDatum& d, const IntVec& lambda);

// Freudenthal recursion.  Error NotDominant.  The result is memoized per
// thread; the reference stays valid for the thread's lifetime.
const WeightMultiset& weight_multiplicities(const RootDatum& d, const IntVec& lambda);

// Alias: toral S_phi-restriction of V_lambda is exactly its weight multiset.
WeightMultiset restrict_to_torus(const RootDatum& d, const IntVec& lambda);

// Klimyk tensor decomposition: map from dominant highest weight to mult.
std::map<IntVec, Int> tensor_decompose(const RootDatum& d, const IntVec& lambda, const IntVec& mu);

// Grade wt(V_lambda) by the central cocharacter of the Levi spanned by the
// simple roots in `levi` (sum of fundamental coweights of the complementary
// simple roots, taken inside the coroot span), then split each level into
// Levi-irreducibles by greedy highest-weight extraction.
// Errors: NotDominant, BadLeviSubset.
LeviFiltration parabolic_filtration(const RootDatum& d, const IntVec& lambda,
                                    const std::vector<int>& levi);

// Central cocharacter used by parabolic_filtration (exposed for tests).
RatVec levi_grading_cocharacter(const RootDatum& d, const std::vector<int>& levi);

}  // namespace wb
