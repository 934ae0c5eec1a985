#pragma once

// Independent oracles for the test and acceptance suites.  Everything here
// recomputes spec'd quantities along a different algorithmic route than the
// library under test.

#include <map>
#include <vector>

#include "workbench/bmo_hecke.hpp"
#include "workbench/rep_theory.hpp"

namespace wb::oracle {

// Kostant multiplicity formula: m_lambda(mu) = sum_W (-1)^l(w) P(w(lambda+rho)-(mu+rho))
// with P the brute-force Kostant partition function.  Independent of the
// Freudenthal recursion in the library.
Int kostant_multiplicity(const RootDatum& d, const IntVec& lambda, const IntVec& mu);

// Full weight multiset via the Kostant formula.
WeightMultiset kostant_weights(const RootDatum& d, const IntVec& lambda);

// Tensor decomposition by brute-force character product followed by greedy
// dominant-character peeling.
std::map<IntVec, Int> peel_tensor(const RootDatum& d, const IntVec& lambda, const IntVec& mu);

// Newton polygon of a dominant GL(n) slope vector has integral vertices
// (breakpoints and endpoint).
bool newton_polygon_integral(const RatVec& nu);

// Orbit count for pairs (u, N) on a single twist chain over F_p:
// u unipotent blockwise, N along the arrows, u N = N u, modulo the product
// of GL_{m_t}(F_p).  restrict_u_trivial counts the u = 1 slice only.
// Supports slot dimensions <= 2.
int count_ff_orbits(const std::vector<int>& dims, int p, bool restrict_u_trivial);

// PGL(3) alternating Weyl sum at lambda = 0, computed through S_3 acting on
// sum-zero integer triples with dominance-by-sorting.  Returns the map from
// fundamental-coweight coordinates to signed multiplicity.
std::map<IntVec, Int> pgl3_alternating_sum_lambda0();

// K0 Coh(N/G^) bookkeeping built from the wall-crossing identity
// [A_mu] = [A_dom(mu)], with dom computed by exhaustive Weyl-orbit search and
// weights from the Kostant oracle.
std::map<IntVec, Int> amu_hecke(const RootDatum& d, const IntVec& lambda, const IntVec& v_hw);

}  // namespace wb::oracle
