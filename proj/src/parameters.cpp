#include "workbench/parameters.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "workbench/error.hpp"

namespace wb {

std::string Character::display() const {
  std::string s = "chi_" + symbol;
  if (twist != 0) s += "|.|^" + std::to_string(twist);
  return s;
}

ToralParameter parse_parameter(const std::string& spec) {
  ToralParameter phi;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    Character c;
    if (colon == std::string::npos) {
      c.symbol = item;
    } else {
      c.symbol = item.substr(0, colon);
      try {
        c.twist = std::stoll(item.substr(colon + 1));
      } catch (...) {
        throw Error("BadInput", "bad twist in '" + item + "'");
      }
    }
    if (c.symbol.empty()) throw Error("BadInput", "empty character symbol");
    phi.chars.push_back(c);
  }
  if (phi.chars.empty()) throw Error("BadInput", "empty parameter");
  return phi;
}

bool is_generic(const ToralParameter& phi) {
  for (const auto& a : phi.chars)
    for (const auto& b : phi.chars)
      if (a.symbol == b.symbol && a.twist == b.twist + 1) return false;
  return true;
}

bool is_generous(const ToralParameter& phi) {
  if (!is_generic(phi)) return false;
  for (size_t i = 0; i < phi.chars.size(); ++i)
    for (size_t j = i + 1; j < phi.chars.size(); ++j)
      if (phi.chars[i] == phi.chars[j]) return false;
  return true;
}

CentralizerShape centralizer(const ToralParameter& phi) {
  std::map<Character, int> counts;
  for (const auto& c : phi.chars) ++counts[c];
  CentralizerShape s;
  for (const auto& [c, m] : counts) s.blocks.emplace_back(c, m);
  return s;
}

std::vector<TwistChain> twist_chains(const ToralParameter& phi) {
  std::map<std::string, std::map<Int, std::vector<int>>> by_symbol;
  for (int i = 0; i < phi.n(); ++i) by_symbol[phi.chars[i].symbol][phi.chars[i].twist].push_back(i);
  std::vector<TwistChain> chains;
  for (const auto& [sym, twists] : by_symbol) {
    TwistChain cur;
    cur.symbol = sym;
    Int prev = 0;
    bool open = false;
    for (const auto& [t, idx] : twists) {
      if (open && t != prev + 1) {
        chains.push_back(cur);
        cur.mult.clear();
        cur.char_indices.clear();
        open = false;
      }
      if (!open) {
        cur.twist0 = t;
        open = true;
      }
      cur.mult.push_back(static_cast<int>(idx.size()));
      cur.char_indices.push_back(idx);
      prev = t;
    }
    if (open) chains.push_back(cur);
  }
  return chains;
}

namespace {

using Partition = std::vector<Int>;
using RankMap = std::map<std::pair<int, int>, Int>;

// A multisegment on a chain of length k: intervals [a,b] with multiplicity.
struct Multisegment {
  std::map<std::pair<int, int>, Int> segs;
};

void enumerate_multisegments_rec(const std::vector<int>& dims, int a,
                                 std::vector<int>& coverage, Multisegment& cur,
                                 std::vector<Multisegment>& out) {
  int k = static_cast<int>(dims.size());
  if (a == k) {
    for (int t = 0; t < k; ++t)
      if (coverage[t] != dims[t]) return;
    out.push_back(cur);
    return;
  }
  // choose all segment multiplicities starting at slot a, longest first
  std::function<void(int)> choose = [&](int b) {
    if (b < a) {
      // all segments starting at a chosen; slot a must now be fully covered
      if (coverage[a] == dims[a]) enumerate_multisegments_rec(dims, a + 1, coverage, cur, out);
      return;
    }
    Int room = dims[a] - coverage[a];
    for (int t = a; t <= b; ++t) room = std::min<Int>(room, dims[t] - coverage[t]);
    for (Int m = 0; m <= room; ++m) {
      if (m > 0) {
        cur.segs[{a, b}] += m;
        for (int t = a; t <= b; ++t) coverage[t] += m;
      }
      choose(b - 1);
      if (m > 0) {
        for (int t = a; t <= b; ++t) coverage[t] -= m;
        cur.segs[{a, b}] -= m;
        if (cur.segs[{a, b}] == 0) cur.segs.erase({a, b});
      }
    }
  };
  choose(k - 1);
}

std::vector<Multisegment> enumerate_multisegments(const std::vector<int>& dims) {
  std::vector<int> coverage(dims.size(), 0);
  Multisegment cur;
  std::vector<Multisegment> out;
  enumerate_multisegments_rec(dims, 0, coverage, cur, out);
  return out;
}

RankMap rank_data_of(const Multisegment& ms, int k) {
  RankMap r;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Int v = 0;
      for (const auto& [seg, m] : ms.segs)
        if (seg.first <= i && j <= seg.second) v += m;
      r[{i, j}] = v;
    }
  return r;
}

// dim Hom(I_[a,b], I_[c,d]) for the equioriented A_k quiver: 1 iff c<=a<=d<=b
Int hom_dim(std::pair<int, int> s, std::pair<int, int> t) {
  return (t.first <= s.first && s.first <= t.second && t.second <= s.second) ? 1 : 0;
}

Int orbit_dim(const Multisegment& ms, const std::vector<int>& dims) {
  Int group_dim = 0;
  for (int m : dims) group_dim += static_cast<Int>(m) * m;
  Int end_dim = 0;
  for (const auto& [s, m1] : ms.segs)
    for (const auto& [t, m2] : ms.segs) end_dim += m1 * m2 * hom_dim(s, t);
  return group_dim - end_dim;
}

std::string partition_str(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(p[i]);
  }
  return s;
}

// Per-chain orbit invariants.
struct ChainOrbit {
  std::vector<Partition> jordan;  // per slot
  RankMap ranks;
  Int dim = -1;
  bool u_trivial = true;
};

std::string chain_orbit_name(const TwistChain& chain, const ChainOrbit& o) {
  std::string s = chain.symbol + "@" + std::to_string(chain.twist0) + ":u=(";
  for (size_t i = 0; i < o.jordan.size(); ++i) {
    if (i) s += '|';
    s += partition_str(o.jordan[i]);
  }
  s += ");r=(";
  bool first = true;
  for (const auto& [ij, v] : o.ranks) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(v);
  }
  s += ')';
  return s;
}

std::vector<ChainOrbit> chain_vogan_orbits(const TwistChain& chain) {
  int k = static_cast<int>(chain.mult.size());
  std::vector<ChainOrbit> out;
  for (const auto& ms : enumerate_multisegments(chain.mult)) {
    ChainOrbit o;
    for (int m : chain.mult) o.jordan.push_back(Partition(m, 1));
    o.ranks = rank_data_of(ms, k);
    o.dim = orbit_dim(ms, chain.mult);
    o.u_trivial = true;
    out.push_back(std::move(o));
  }
  return out;
}

// Orbits with u regular in the unique multiplicity-2 slot p.  The arrows
// into p land in the canonical line L = ker(u-1) = im(u-1), the arrows out
// of p kill L, so every composite through p vanishes and the chain splits
// at p into two all-multiplicity-one chains sharing the slot.
std::vector<ChainOrbit> chain_u2_orbits(const TwistChain& chain, int p) {
  int k = static_cast<int>(chain.mult.size());
  std::vector<int> left_dims(p + 1, 1), right_dims(k - p, 1);
  auto lefts = enumerate_multisegments(left_dims);
  auto rights = enumerate_multisegments(right_dims);
  std::vector<ChainOrbit> out;
  for (const auto& lm : lefts)
    for (const auto& rm : rights) {
      ChainOrbit o;
      o.u_trivial = false;
      for (int t = 0; t < k; ++t)
        o.jordan.push_back(t == p ? Partition{2} : Partition{1});
      RankMap left_ranks = rank_data_of(lm, p + 1);
      RankMap right_ranks = rank_data_of(rm, k - p);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          Int v = 0;
          if (j <= p)
            v = left_ranks[{i, j}];
          else if (i >= p)
            v = right_ranks[{i - p, j - p}];
          // i < p < j: composite through p vanishes
          o.ranks[{i, j}] = v;
        }
      out.push_back(std::move(o));
    }
  return out;
}

bool partition_leq(const Partition& a, const Partition& b) {
  // dominance order; partitions of equal size, weakly decreasing
  Int sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

bool chain_orbit_leq(const ChainOrbit& a, const ChainOrbit& b) {
  for (size_t t = 0; t < a.jordan.size(); ++t)
    if (!partition_leq(a.jordan[t], b.jordan[t])) return false;
  for (const auto& [ij, v] : a.ranks)
    if (v > b.ranks.at(ij)) return false;
  return true;
}

OrbitPoset assemble(const ToralParameter& phi,
                    const std::vector<std::vector<ChainOrbit>>& per_chain,
                    const std::vector<TwistChain>& chains, bool candidate) {
  OrbitPoset poset;
  poset.closure_is_candidate = candidate;
  // cartesian product over chains
  std::vector<size_t> idx(per_chain.size(), 0);
  std::vector<std::vector<ChainOrbit>> tuples;
  while (true) {
    std::vector<ChainOrbit> tuple;
    for (size_t c = 0; c < per_chain.size(); ++c) tuple.push_back(per_chain[c][idx[c]]);
    tuples.push_back(std::move(tuple));
    size_t c = 0;
    for (; c < per_chain.size(); ++c) {
      if (++idx[c] < per_chain[c].size()) break;
      idx[c] = 0;
    }
    if (c == per_chain.size()) break;
  }
  for (const auto& tuple : tuples) {
    FiberOrbit o;
    Int dim = 0;
    bool dim_known = true;
    std::string name;
    for (size_t c = 0; c < tuple.size(); ++c) {
      o.u_jordan.push_back(tuple[c].jordan);
      o.rank_data.push_back(tuple[c].ranks);
      o.u_trivial = o.u_trivial && tuple[c].u_trivial;
      if (tuple[c].dim < 0)
        dim_known = false;
      else
        dim += tuple[c].dim;
      if (c) name += " x ";
      name += chain_orbit_name(chains[c], tuple[c]);
    }
    o.dim = dim_known ? dim : -1;
    o.name = name;
    poset.orbits.push_back(std::move(o));
  }
  std::sort(poset.orbits.begin(), poset.orbits.end());
  (void)phi;

  int n = static_cast<int>(poset.orbits.size());
  auto leq = [&](int i, int j) {
    for (size_t c = 0; c < poset.orbits[i].u_jordan.size(); ++c) {
      // recover chain orbits from stored invariants
      ChainOrbit a{poset.orbits[i].u_jordan[c], poset.orbits[i].rank_data[c], 0, true};
      ChainOrbit b{poset.orbits[j].u_jordan[c], poset.orbits[j].rank_data[c], 0, true};
      if (!chain_orbit_leq(a, b)) return false;
    }
    return true;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (int t = 0; t < n; ++t)
        if (t != i && t != j && leq(i, t) && leq(t, j)) cover = false;
      if (cover) poset.covering_edges.emplace_back(i, j);
    }
  return poset;
}

}  // namespace

OrbitPoset vogan_orbits(const ToralParameter& phi) {
  auto chains = twist_chains(phi);
  std::vector<std::vector<ChainOrbit>> per_chain;
  for (const auto& chain : chains) per_chain.push_back(chain_vogan_orbits(chain));
  return assemble(phi, per_chain, chains, /*candidate=*/false);
}

OrbitPoset fiber_orbits(const ToralParameter& phi) {
  auto chains = twist_chains(phi);
  std::vector<std::vector<ChainOrbit>> per_chain;
  for (const auto& chain : chains) {
    int slot2 = -1;
    for (size_t t = 0; t < chain.mult.size(); ++t) {
      if (chain.mult[t] == 1) continue;
      if (chain.mult[t] > 2 || slot2 >= 0)
        throw Error("UnsupportedShape",
                    "chain " + chain.symbol + "@" + std::to_string(chain.twist0) +
                        " has multiplicities beyond the classifier scope");
      slot2 = static_cast<int>(t);
    }
    auto orbits = chain_vogan_orbits(chain);
    if (slot2 >= 0) {
      auto extra = chain_u2_orbits(chain, slot2);
      orbits.insert(orbits.end(), extra.begin(), extra.end());
    }
    per_chain.push_back(std::move(orbits));
  }
  return assemble(phi, per_chain, chains, /*candidate=*/true);
}

}  // namespace wb
