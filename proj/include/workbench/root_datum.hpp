#pragma once

#include <string>
#include <vector>

#include "workbench/intlinalg.hpp"
#include "workbench/numeric.hpp"

namespace wb {

// Weyl group element, acting on both lattices.  `word` is a reduced word in
// simple reflections; on_chars is the action on X*, on_cochars on X_*.
struct WeylElement {
  std::vector<int> word;
  Mat on_chars;
  Mat on_cochars;

  int length() const { return static_cast<int>(word.size()); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
  bool operator==(const WeylElement& o) const { return on_chars == o.on_chars; }
};

// Root datum of a split reductive group: character lattice X* = Z^rank,
// cocharacter lattice X_* = Z^rank, pairing <x,y> = x^T P y, simple roots in
// X* and simple coroots in X_*.  Values are immutable after construction.
struct RootDatum {
  int rank = 0;
  std::vector<std::string> basis_names;  // names of the X* basis, metadata only
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;
  Mat pairing_matrix;
  std::string preset_name;

  // derived at construction
  std::vector<IntVec> positive_roots;
  std::vector<IntVec> positive_coroots;  // positive_coroots[k] is the coroot of positive_roots[k]
  IntVec two_rho;        // sum of positive roots, in X*
  IntVec two_rho_check;  // sum of positive coroots, in X_*

  int ssrank() const { return static_cast<int>(simple_roots.size()); }

  Rat pair(const RatVec& x, const RatVec& y) const;
  Int pair(const IntVec& x, const IntVec& y) const;
  Int cartan(int i, int j) const;  // <alpha_i, alpha_j^vee>

  bool is_dominant_weight(const IntVec& v) const;
  bool is_dominant_coweight(const RatVec& v) const;

  // s_i acting on X* resp. X_*
  IntVec reflect_weight(int i, const IntVec& v) const;
  RatVec reflect_coweight(int i, const RatVec& v) const;

  Mat simple_reflection_on_chars(int i) const;
  Mat simple_reflection_on_cochars(int i) const;
  WeylElement identity_element() const;

  // Swaps the two lattices: roots <-> coroots.  Weights of the dual group
  // live in this datum's X_*.
  RootDatum dual() const;

  std::string tag() const;        // identifies the datum for cross-checks
  std::string cache_key() const;  // full structural serialization
};

// Presets: GL(n), SL(n), PGL(n), Sp(4), GSp(4); names accept "GL(3)"/"GL3"
// with an optional "-dual" suffix.  Errors: UnknownPreset, InvalidCartan.
RootDatum build_root_datum(const std::string& preset);

// Explicit data.  Errors: InvalidCartan if the pairing pattern is not a valid
// Cartan matrix or the roots/coroots are linearly dependent.
RootDatum build_root_datum(int rank, std::vector<IntVec> simple_roots,
                           std::vector<IntVec> simple_coroots, Mat pairing,
                           std::string name = "explicit",
                           std::vector<std::string> basis_names = {});

struct DominantWeight {
  IntVec vector;
  WeylElement witness;  // witness * input = vector
};
struct DominantCoweight {
  RatVec vector;
  WeylElement witness;
};

DominantWeight dominant_rep(const RootDatum& d, const IntVec& v);
DominantCoweight dominant_rep_coweight(const RootDatum& d, const RatVec& v);

// Same walk without witness bookkeeping; sign is (-1)^(reflections applied),
// which equals (-1)^(l(w)) for the witness w.
struct SignedDominant {
  IntVec vector;
  int sign;
};
SignedDominant dominant_rep_signed(const RootDatum& d, IntVec v);
IntVec dominant_coweight_vector(const RootDatum& d, RatVec v);  // integral result expected

// Full enumeration by BFS over simple reflections; reduced words come from
// the BFS layering.  Error GroupTooLarge beyond `cap` elements.
std::vector<WeylElement> weyl_group(const RootDatum& d, size_t cap = 1000000);
WeylElement longest_element(const RootDatum& d);

// nu <= nu' in dominance order: nu' - nu is a nonnegative rational
// combination of simple coroots.  Both arguments must be dominant.
bool dominance_leq(const RootDatum& d, const RatVec& nu, const RatVec& nu_prime);

}  // namespace wb
