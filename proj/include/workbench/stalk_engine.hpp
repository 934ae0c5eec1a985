#pragma once

#include <map>
#include <string>
#include <vector>

#include "workbench/bmo_hecke.hpp"

namespace wb {

// Label of one stalk summand; delta_twist marks a delta_b^{1/2} factor.
struct StalkLabel {
  RepLabel rep;
  bool delta_twist = false;

  std::string key() const { return (delta_twist ? "D*" : "") + rep.key(); }
  std::string display() const;
  bool operator<(const StalkLabel& o) const { return key() < o.key(); }
  bool operator==(const StalkLabel& o) const { return key() == o.key(); }
};

// Per-stratum, per-degree multisets of labels.  Degrees are raw (i_b^*);
// renormalized display divides out delta_b^{1/2} and shifts by <2rho, nu_b>.
struct StalkTable {
  std::string name;
  std::string component;  // kappa component id
  std::map<BClass, std::map<int, std::map<StalkLabel, Int>>> entries;
  bool truncated = false;
  int window_top = -1;       // largest stratum label when truncated
  bool reference_checked = true;  // false: produced by the recursion with no
                                  // independent reference table (odd n >= 3)

  bool empty_at(const BClass& b) const;
  void add(const BClass& b, int degree, const StalkLabel& l, Int mult);
  // signed degree sums per label at one stratum
  std::map<StalkLabel, Int> euler(const BClass& b) const;
  std::vector<BClass> support() const;
};

enum class StalkMode { Raw, Renormalized };

// Renormalized view: degree -> degree - shift(b), delta factor divided out.
StalkTable renormalize(const RootDatum& d, const StalkTable& t);

// Deterministic stalkwise triangle propagation.
struct TrianglePlan {
  enum class Op { Seed, Cone, Shift, Rotate };
  struct Step {
    Op op;
    int a = -1, b = -1;  // operand step indices
    int shift_by = 0;
    IntVec seed_lambda;  // Seed: the coweight of the seeded stratum
    std::string label;
  };
  std::vector<Step> steps;

  int seed(const IntVec& lambda, const std::string& label);
  int cone(int a, int b, const std::string& label);
  int shift(int a, int k, const std::string& label);
  int rotate(int a, const std::string& label) { return shift(a, 1, label); }
};

// Executes a plan over the given datum.  Errors: AmbiguousExtension when a
// cone hits a stratum where both operands are nonzero in a common degree.
std::vector<StalkTable> execute(const RootDatum& d, const TrianglePlan& plan);

// i_{b!} pi extended by zero: single raw entry at degree shift(b), label
// pi (x) delta^{1/2} off the basic stratum.
StalkTable seed_shriek(const RootDatum& d, const BClass& b, const RepLabel& pi);

StalkTable cone(const RootDatum& d, const StalkTable& a, const StalkTable& b);
StalkTable shift_table(const StalkTable& t, int k);

// PGL(2) trivial-parameter families.  n indexes the stratum b_n; star tables
// are truncated at b_{n + 2*jmax}.
StalkTable compute_F(const RootDatum& pgl2, int n);
StalkTable compute_sharp(const RootDatum& pgl2, int n);
StalkTable compute_star(const RootDatum& pgl2, int n, int jmax);

struct PerversityReport {
  struct Row {
    BClass stratum;
    int max_degree;
    Int bound;
    bool within;
  };
  std::vector<Row> rows;
  bool all_within = true;
};
// Left-half membership only: max raw degree <= <2rho, nu_b> per stratum.
PerversityReport perversity_check(const RootDatum& d, const StalkTable& t);
bool support_check(const StalkTable& t, const std::vector<BClass>& allowed);

// The b_n stratum of Bun_{PGL2} and its BM-O representation label.
BClass pgl2_stratum(const RootDatum& pgl2, int n);
RepLabel pgl2_pi(const RootDatum& pgl2, int n);

}  // namespace wb
