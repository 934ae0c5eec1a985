#pragma once

#include <map>
#include <string>
#include <vector>

#include "workbench/numeric.hpp"

namespace wb {

// One character chi_symbol * |.|^twist of the Weil group.
struct Character {
  std::string symbol;
  Int twist = 0;

  bool operator==(const Character& o) const { return symbol == o.symbol && twist == o.twist; }
  bool operator<(const Character& o) const {
    if (symbol != o.symbol) return symbol < o.symbol;
    return twist < o.twist;
  }
  std::string display() const;
};

// Semisimple toral L-parameter for GL(n): an ordered list of characters.
struct ToralParameter {
  std::vector<Character> chars;
  int n() const { return static_cast<int>(chars.size()); }
};

ToralParameter parse_parameter(const std::string& spec);  // "a:0,b:1,..."

struct CentralizerShape {
  std::vector<std::pair<Character, int>> blocks;  // distinct characters with multiplicity
};

bool is_generic(const ToralParameter& phi);
bool is_generous(const ToralParameter& phi);
CentralizerShape centralizer(const ToralParameter& phi);

// Twist chains: characters grouped by symbol, split at twist gaps.  slots are
// consecutive twists; mult[i] is the dimension at slot i.  char_indices maps
// slots to the positions in phi.chars carrying them (input order).
struct TwistChain {
  std::string symbol;
  Int twist0 = 0;  // twist of slot 0
  std::vector<int> mult;
  std::vector<std::vector<int>> char_indices;
};
std::vector<TwistChain> twist_chains(const ToralParameter& phi);

// Orbit in the fiber over x_phi, classified by complete invariants.
struct FiberOrbit {
  // per chain: Jordan type of u on each slot (partition, weakly decreasing)
  std::vector<std::vector<std::vector<Int>>> u_jordan;
  // per chain: rank of the composite map from slot i to slot j (i < j)
  std::vector<std::map<std::pair<int, int>, Int>> rank_data;
  Int dim = -1;  // orbit dimension when computed (u = 1 orbits only)
  std::string name;
  bool u_trivial = true;

  bool operator<(const FiberOrbit& o) const { return name < o.name; }
  bool operator==(const FiberOrbit& o) const { return name == o.name; }
};

struct OrbitPoset {
  std::vector<FiberOrbit> orbits;
  std::vector<std::pair<int, int>> covering_edges;  // lower -> upper
  bool closure_is_candidate = false;
};

// Orbits with u = 1 (the Vogan variety), classified by rank data =
// multisegments.  Closure order is pointwise rank dominance (exact).
OrbitPoset vogan_orbits(const ToralParameter& phi);

// Orbits with u allowed nontrivial.  Supported chain shapes: all slot
// multiplicities 1 except at most one slot of multiplicity 2.  The emitted
// specialization relation is a candidate, generated by simultaneous
// rank-drop and Jordan-type-drop moves.  Error: UnsupportedShape.
OrbitPoset fiber_orbits(const ToralParameter& phi);

}  // namespace wb
