#include "workbench/kottwitz.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "workbench/error.hpp"

namespace wb {

Pi1 pi1_data(const RootDatum& d) {
  Pi1 p;
  p.rank = d.rank;
  p.snf = smith_normal_form(columns(d.simple_coroots, d.rank));
  return p;
}

IntVec Pi1::normal_form(const IntVec& rep) const {
  IntVec y = snf.u * rep;
  for (int i = 0; i < snf.rank; ++i) {
    Int m = snf.divisors[i];
    y[i] = ((y[i] % m) + m) % m;
  }
  return y;
}

std::optional<IntVec> Pi1::free_part(const RatVec& v) const {
  RatVec y = snf.u * v;
  IntVec free;
  for (int i = snf.rank; i < rank; ++i) {
    if (!is_integer(y[i])) return std::nullopt;
    free.push_back(y[i].numerator());
  }
  return free;
}

IntVec Pi1::free_part_int(const IntVec& v) const {
  IntVec y = snf.u * v;
  return IntVec(y.begin() + snf.rank, y.end());
}

std::vector<IntVec> Pi1::classes_with_free_part(const IntVec& free) const {
  // y-coordinates: torsion slots i < rank(D) with divisor d_i, then free slots.
  // Representatives are pulled back through U^{-1}; since U is unimodular we
  // can instead solve U x = y exactly by running the inverse via SNF of U.
  // Cheaper: x = U^{-1} y with U^{-1} computed once by integer Gaussian steps.
  // Here we just enumerate y and invert by solve_integral on U.
  std::vector<IntVec> reps;
  std::vector<Int> radix;
  for (int i = 0; i < snf.rank; ++i) radix.push_back(snf.divisors[i]);
  IntVec digits(radix.size(), 0);
  Mat u = snf.u;
  while (true) {
    IntVec y(rank, 0);
    for (size_t i = 0; i < digits.size(); ++i) y[i] = digits[i];
    for (int i = snf.rank; i < rank; ++i) y[i] = free[i - snf.rank];
    auto x = solve_integral(u, to_rat(y));
    if (!x) throw Error("InternalError", "unimodular solve failed");
    reps.push_back(*x);
    size_t i = 0;
    for (; i < radix.size(); ++i) {
      if (++digits[i] < radix[i]) break;
      digits[i] = 0;
    }
    if (i == radix.size()) break;
  }
  return reps;
}

namespace {

// kappa display drops the divisor-1 coordinates, which are identically zero.
std::string kappa_display(const Pi1& p, const IntVec& kappa_nf) {
  IntVec shown;
  for (int i = 0; i < p.rank; ++i) {
    if (i < p.snf.rank && p.snf.divisors[i] == 1) continue;
    shown.push_back(kappa_nf[i]);
  }
  return to_string(shown);
}

std::string display_name(const RootDatum& d, const Pi1& p, const RatVec& nu, const IntVec& kappa_nf) {
  if (d.preset_name == "PGL(2)") {
    // paper naming: b_n for nu = n, b_{1/2} for the basic class with kappa = 1
    if (is_zero(nu) && kappa_nf.size() == 1 && kappa_nf[0] == 1) return "b_{1/2}";
    if (nu.size() == 1 && is_integer(nu[0])) return "b_" + std::to_string(nu[0].numerator());
  }
  return "nu=" + to_string(nu) + ";k=" + kappa_display(p, kappa_nf);
}

std::vector<int> levi_of_newton(const RootDatum& d, const RatVec& nu) {
  std::vector<int> levi;
  for (int i = 0; i < d.ssrank(); ++i)
    if (d.pair(to_rat(d.simple_roots[i]), nu) == 0) levi.push_back(i);
  return levi;
}

}  // namespace

BClass validate_bclass(const RootDatum& d, const RatVec& nu, const IntVec& kappa_rep) {
  if (static_cast<int>(nu.size()) != d.rank || static_cast<int>(kappa_rep.size()) != d.rank)
    throw Error("BadInput", "vector length does not match rank");
  if (!d.is_dominant_coweight(nu)) throw Error("NotDominant", "Newton point " + to_string(nu));
  Pi1 p = pi1_data(d);
  auto nu_free = p.free_part(nu);
  IntVec kappa_free = p.free_part_int(kappa_rep);
  if (!nu_free || *nu_free != kappa_free)
    throw Error("KappaMismatch", "kappa and Newton point differ in pi_1(G) tensor Q");

  // Existence of an integral kappa_M over the centralizer Levi M lifting
  // kappa with rational image nu:  nu - kappa_rep must lie in
  // span_Q(coroots of M) + Z-span(all simple coroots).  Test by pairing with
  // the kernel lattice of the M-coroots and solving integrally.
  std::vector<int> levi = levi_of_newton(d, nu);
  std::vector<IntVec> levi_coroots;
  for (int i : levi) levi_coroots.push_back(d.simple_coroots[i]);
  // functionals f in Z^rank with f^T C_M = 0, i.e. the kernel of C_M^T
  auto fs = kernel_lattice(columns(levi_coroots, d.rank).transpose());
  Mat f = columns(fs, d.rank).transpose();
  RatVec t(d.rank);
  for (int i = 0; i < d.rank; ++i) t[i] = nu[i] - Rat(kappa_rep[i]);
  Mat all = columns(d.simple_coroots, d.rank);
  Mat a = f * all;
  RatVec b = f * t;
  if (!solve_integral(a, b))
    throw Error("NotIntegral", "no integral kappa_M lifts kappa with Newton point " + to_string(nu));

  BClass out;
  out.newton = nu;
  out.kappa_rep = kappa_rep;
  out.kappa_nf = p.normal_form(kappa_rep);
  out.datum_tag = d.tag();
  out.display = display_name(d, p, nu, out.kappa_nf);
  return out;
}

std::optional<BClass> bclass_from_newton(const RootDatum& d, const RatVec& nu) {
  if (!d.is_dominant_coweight(nu)) throw Error("NotDominant", "Newton point " + to_string(nu));
  Pi1 p = pi1_data(d);
  auto nu_free = p.free_part(nu);
  if (!nu_free) return std::nullopt;
  std::optional<BClass> found;
  for (const auto& rep : p.classes_with_free_part(*nu_free)) {
    try {
      BClass b = validate_bclass(d, nu, rep);
      if (found) return std::nullopt;  // ambiguous
      found = b;
    } catch (const Error&) {
    }
  }
  return found;
}

std::vector<BClass> enumerate_bg(const RootDatum& d, const Rat& slope_bound, Int denom_bound) {
  if (slope_bound <= 0 || denom_bound <= 0) throw Error("BadInput", "bounds must be positive");
  Int lcm = 1;
  for (Int q = 2; q <= denom_bound; ++q) lcm = std::lcm(lcm, q);
  // admissible coordinate values
  std::vector<Rat> values;
  for (Int n = -(slope_bound * lcm).numerator(); Rat(n, lcm) <= slope_bound; ++n) {
    Rat v(n, lcm);
    if (v < -slope_bound) continue;
    if (v.denominator() <= denom_bound) values.push_back(v);
  }
  Pi1 p = pi1_data(d);
  std::set<BClass> out;
  std::vector<int> idx(d.rank, 0);
  while (true) {
    RatVec nu(d.rank);
    for (int i = 0; i < d.rank; ++i) nu[i] = values[idx[i]];
    if (d.is_dominant_coweight(nu)) {
      auto nu_free = p.free_part(nu);
      if (nu_free) {
        for (const auto& rep : p.classes_with_free_part(*nu_free)) {
          try {
            out.insert(validate_bclass(d, nu, rep));
          } catch (const Error&) {
          }
        }
      }
    }
    int i = 0;
    for (; i < d.rank; ++i) {
      if (++idx[i] < static_cast<int>(values.size())) break;
      idx[i] = 0;
    }
    if (i == d.rank) break;
  }
  return std::vector<BClass>(out.begin(), out.end());
}

bool newton_leq(const RootDatum& d, const BClass& b, const BClass& b_prime) {
  if (b.datum_tag != b_prime.datum_tag) throw Error("BadInput", "classes from different data");
  if (b.kappa_nf != b_prime.kappa_nf) return false;
  return dominance_leq(d, b.newton, b_prime.newton);
}

std::vector<int> centralizer_levi(const RootDatum& d, const BClass& b) {
  return levi_of_newton(d, b.newton);
}

bool is_basic(const RootDatum& d, const BClass& b) {
  return static_cast<int>(centralizer_levi(d, b).size()) == d.ssrank();
}

Int shift(const RootDatum& d, const BClass& b) {
  Rat s = d.pair(to_rat(d.two_rho), b.newton);
  if (!is_integer(s)) throw Error("NonIntegralShift", "<2rho, nu> = " + to_string(s));
  return s.numerator();
}

StrataPoset strata_poset(const RootDatum& d, const std::vector<BClass>& classes) {
  StrataPoset p;
  p.elements = classes;
  std::sort(p.elements.begin(), p.elements.end());
  int n = static_cast<int>(p.elements.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      leq[i][j] = newton_leq(d, p.elements[i], p.elements[j]);
      if (leq[i][j] && i != j) p.relation.emplace_back(i, j);
    }
  for (int i = 0; i < n; ++i) p.relation.emplace_back(i, i);
  std::sort(p.relation.begin(), p.relation.end());
  // covering edges: i < j with nothing strictly between
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = false;
      if (covered) p.covering_edges.emplace_back(i, j);
    }
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n; ++j)
      if (j != i && leq[j][i]) minimal = false;
    if (minimal) p.minimal_elements.push_back(i);
  }
  return p;
}

namespace {
int index_of(const BClass& b, const StrataPoset& p) {
  for (size_t i = 0; i < p.elements.size(); ++i)
    if (p.elements[i] == b) return static_cast<int>(i);
  throw Error("BadInput", "class not in poset");
}
}  // namespace

std::vector<BClass> specializations(const BClass& b, const StrataPoset& p) {
  int i = index_of(b, p);
  std::vector<BClass> out;
  for (const auto& [x, y] : p.relation)
    if (x == i && y != i) out.push_back(p.elements[y]);
  return out;
}

std::vector<BClass> generizations(const BClass& b, const StrataPoset& p) {
  int i = index_of(b, p);
  std::vector<BClass> out;
  for (const auto& [x, y] : p.relation)
    if (y == i && x != i) out.push_back(p.elements[x]);
  return out;
}

}  // namespace wb
