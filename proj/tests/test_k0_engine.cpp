#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "workbench/error.hpp"
#include "workbench/k0_engine.hpp"

using namespace wb;

namespace {

// coefficient of the trivial-parameter class b_lambda in v
Int coeff_of(const RootDatum& d, const K0Vector& v, const IntVec& lambda) {
  AtomicClass c = bmo_trivial(d, lambda);
  auto it = v.coeffs.find(c);
  return it == v.coeffs.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("alternating expansion: PGL(2) gives [i_n] - [i_{n-2}]") {
  RootDatum d = build_root_datum("PGL2");
  for (Int n = 2; n <= 10; ++n) {
    K0Vector v = alternating_expansion(d, {n});
    CHECK(v.coeffs.size() == 2);
    CHECK(coeff_of(d, v, {n}) == 1);
    CHECK(coeff_of(d, v, {n - 2}) == -1);
  }
  CHECK_THROWS_AS(alternating_expansion(d, {1}), Error);  // target - 2rho not dominant
}

TEST_CASE("alternating expansion: PGL(3) at lambda = 0 against the independent oracle") {
  RootDatum d = build_root_datum("PGL3");
  K0Vector v = alternating_expansion(d, d.two_rho_check);  // lambda = 0
  auto expected = oracle::pgl3_alternating_sum_lambda0();
  REQUIRE(expected.size() == v.coeffs.size());
  for (const auto& [coords, coeff] : expected) CHECK(coeff_of(d, v, coords) == coeff);
  // frozen golden values
  CHECK(coeff_of(d, v, {2, 2}) == 1);
  CHECK(coeff_of(d, v, {3, 0}) == -1);
  CHECK(coeff_of(d, v, {0, 3}) == -1);
  CHECK(coeff_of(d, v, {1, 1}) == 2);
  CHECK(coeff_of(d, v, {0, 0}) == -1);
}

TEST_CASE("alternating expansion on a torus: single term") {
  RootDatum d = build_root_datum("GL1");
  K0Vector v = alternating_expansion(d, {3});
  REQUIRE(v.coeffs.size() == 1);
  CHECK(coeff_of(d, v, {3}) == 1);
}

TEST_CASE("alternating expansion: signed coefficient mass vanishes for |W| > 1") {
  for (const char* name : {"PGL2", "PGL3", "GL2", "GL3"}) {
    RootDatum d = build_root_datum(name);
    IntVec lambda(d.rank, 0);
    if (d.preset_name.rfind("GL(", 0) == 0) lambda[0] = 2;  // any dominant works
    K0Vector v = alternating_expansion(d, lambda + d.two_rho_check);
    CHECK(v.signed_mass() == 0);
  }
}

TEST_CASE("hecke_k0_trivial: PGL(2) adjoint rep away from the wall") {
  RootDatum d = build_root_datum("PGL2");
  for (Int n = 2; n <= 6; ++n) {
    K0Vector v = hecke_k0_trivial(d, {n}, {2});
    CHECK(v.coeffs.size() == 3);
    CHECK(coeff_of(d, v, {n + 2}) == 1);
    CHECK(coeff_of(d, v, {n}) == 1);
    CHECK(coeff_of(d, v, {n - 2}) == 1);
  }
}

TEST_CASE("hecke_k0_trivial: the PGL(2) wall case dom(-2) = 2") {
  RootDatum d = build_root_datum("PGL2");
  K0Vector v = hecke_k0_trivial(d, {0}, {2});
  CHECK(v.coeffs.size() == 2);
  CHECK(coeff_of(d, v, {2}) == 2);
  CHECK(coeff_of(d, v, {0}) == 1);
  // the mandated independent A_mu oracle cross-check
  auto amu = oracle::amu_hecke(d, {0}, {2});
  CHECK(amu.size() == 2);
  CHECK(amu.at({2}) == 2);
  CHECK(amu.at({0}) == 1);
}

TEST_CASE("hecke_k0_trivial agrees with the A_mu oracle") {
  RootDatum pgl2 = build_root_datum("PGL2");
  for (Int lam = 0; lam <= 4; ++lam)
    for (Int vrep = 0; vrep <= 6; vrep += 2) {
      K0Vector mine = hecke_k0_trivial(pgl2, {lam}, {vrep});
      auto amu = oracle::amu_hecke(pgl2, {lam}, {vrep});
      CHECK(mine.coeffs.size() == amu.size());
      for (const auto& [l, c] : amu) CHECK(coeff_of(pgl2, mine, l) == c);
    }
  RootDatum gl2 = build_root_datum("GL2");
  for (IntVec lam : {IntVec{0, 0}, IntVec{1, 0}, IntVec{2, 0}})
    for (IntVec vrep : {IntVec{1, 0}, IntVec{1, 1}, IntVec{2, 0}, IntVec{1, -1}}) {
      K0Vector mine = hecke_k0_trivial(gl2, lam, vrep);
      auto amu = oracle::amu_hecke(gl2, lam, vrep);
      CHECK(mine.coeffs.size() == amu.size());
      for (const auto& [l, c] : amu) CHECK(coeff_of(gl2, mine, l) == c);
    }
}

TEST_CASE("hecke_k0_trivial: identities and mass") {
  RootDatum d = build_root_datum("PGL2");
  K0Vector v = hecke_k0_trivial(d, {4}, {0});
  REQUIRE(v.coeffs.size() == 1);
  CHECK(coeff_of(d, v, {4}) == 1);
  RootDatum dual = d.dual();
  for (Int vrep = 0; vrep <= 8; vrep += 2)
    CHECK(hecke_k0_trivial(d, {2}, {vrep}).positive_mass() == weyl_dim(dual, {vrep}));
}

TEST_CASE("hecke_k0_trivial composition through tensor constituents") {
  RootDatum d = build_root_datum("PGL2");
  RootDatum dual = d.dual();
  IntVec lam = {2};
  for (IntVec va : {IntVec{2}, IntVec{4}})
    for (IntVec vb : {IntVec{2}}) {
      // apply va then vb
      std::map<AtomicClass, Int> lhs;
      for (const auto& [c1, m1] : hecke_k0_trivial(d, lam, va).coeffs) {
        IntVec mu = to_int(c1.b.newton);
        for (const auto& [c2, m2] : hecke_k0_trivial(d, mu, vb).coeffs) lhs[c2] += m1 * m2;
      }
      // apply constituents of va (x) vb
      std::map<AtomicClass, Int> rhs;
      for (const auto& [hw, mult] : tensor_decompose(dual, va, vb))
        for (const auto& [c, m] : hecke_k0_trivial(d, lam, hw).coeffs) rhs[c] += mult * m;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("k0_class_of reads sheaf classes off stalk tables") {
  RootDatum d = build_root_datum("PGL2");
  for (int n : {2, 4, 6}) {
    K0Vector f = k0_class_of(d, compute_F(d, n));
    CHECK(f.coeffs.size() == 2);
    CHECK(coeff_of(d, f, {n}) == 1);
    CHECK(coeff_of(d, f, {n - 2}) == -1);
    // sharp tables have shriek class e_n
    K0Vector s = k0_class_of(d, compute_sharp(d, n));
    CHECK(s.coeffs.size() == 1);
    CHECK(coeff_of(d, s, {n}) == 1);
  }
}

TEST_CASE("build_block + verify_gamma on windows up to b_10") {
  RootDatum d = build_root_datum("PGL2");
  for (int top : {2, 5, 10}) {
    K0Block block = build_block(d, top);
    GammaReport rep = verify_gamma(d, block);
    CHECK(rep.star_left_inverse);
    CHECK(rep.shriek_equals_sharp);
    CHECK(rep.positivity);
    CHECK(rep.ok());
    CHECK(block.gamma_shriek == Mat::identity(top + 1));
  }
}

TEST_CASE("basis conversion shriek <-> hadal round-trips") {
  RootDatum d = build_root_datum("PGL2");
  int top = 10;
  for (Int n = 0; n <= top; ++n) {
    K0Vector v;
    v.add(bmo_trivial(d, {n}), 1);
    K0Vector h = to_hadal(d, v, top);
    // [i_n] = sum of [F_{n-2k}], all coefficients 1
    CHECK(static_cast<Int>(h.coeffs.size()) == n / 2 + 1);
    for (const auto& [c, coeff] : h.coeffs) CHECK(coeff == 1);
    K0Vector back = from_hadal(d, h, top);
    CHECK(back.coeffs == v.coeffs);
  }
  // telescoping: sum over the window of F-classes equals [i_n] - [i_top+2...]
  for (Int n : {0, 1, 2}) {
    K0Vector total;
    Int top_n = n + 8;
    for (Int m = n + 2; m <= top_n; m += 2) {
      K0Vector f = k0_class_of(d, compute_F(d, static_cast<int>(m)));
      for (const auto& [c, coeff] : f.coeffs) total.add(c, -coeff);  // [F_m[1]] = -[F_m]
    }
    CHECK(coeff_of(d, total, {n}) == 1);
    CHECK(coeff_of(d, total, {top_n}) == -1);
    CHECK(total.coeffs.size() == 2);
  }
}

TEST_CASE("window closure errors") {
  RootDatum d = build_root_datum("PGL2");
  CHECK_THROWS_AS(build_block(d, 0), Error);
  K0Vector v;
  v.add(bmo_trivial(d, {12}), 1);
  CHECK_THROWS_AS(to_hadal(d, v, 10), Error);
}
