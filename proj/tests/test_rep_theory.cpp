#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "workbench/error.hpp"
#include "workbench/rep_theory.hpp"

using namespace wb;

TEST_CASE("weyl_dim basics") {
  RootDatum gl3 = build_root_datum("GL3");
  CHECK(weyl_dim(gl3, {1, 0, 0}) == 3);
  CHECK(weyl_dim(gl3, {1, 1, 0}) == 3);
  CHECK(weyl_dim(gl3, {1, 1, 1}) == 1);
  CHECK(weyl_dim(gl3, {2, 1, 0}) == 8);

  // SL(2) = PGL(2)-dual: dim V_n = n+1
  RootDatum sl2 = build_root_datum("SL2");
  for (Int n = 0; n <= 12; ++n) CHECK(weyl_dim(sl2, {n}) == n + 1);

  RootDatum gl2 = build_root_datum("GL2");
  CHECK(weyl_dim(gl2, {2, 0}) == 3);
  CHECK_THROWS_AS(weyl_dim(gl2, {0, 2}), Error);
}

TEST_CASE("weight multiplicities: SL2 adjoint and GL(n) standard") {
  RootDatum sl2 = build_root_datum("SL2");
  WeightMultiset w = weight_multiplicities(sl2, {2});
  CHECK(w.total_mass() == 3);
  CHECK(w.mult({2}) == 1);
  CHECK(w.mult({0}) == 1);
  CHECK(w.mult({-2}) == 1);

  RootDatum gl3 = build_root_datum("GL3");
  WeightMultiset std3 = weight_multiplicities(gl3, {1, 0, 0});
  CHECK(std3.total_mass() == 3);
  CHECK(std3.mult({1, 0, 0}) == 1);
  CHECK(std3.mult({0, 1, 0}) == 1);
  CHECK(std3.mult({0, 0, 1}) == 1);

  // determinant of GL(2): a single weight
  RootDatum gl2 = build_root_datum("GL2");
  WeightMultiset det = weight_multiplicities(gl2, {1, 1});
  CHECK(det.total_mass() == 1);
  CHECK(det.mult({1, 1}) == 1);
}

TEST_CASE("SL(3) adjoint weight zero has multiplicity 2") {
  RootDatum sl3 = build_root_datum("SL3");
  WeightMultiset w = weight_multiplicities(sl3, {1, 1});
  CHECK(w.total_mass() == 8);
  CHECK(w.mult({0, 0}) == 2);
  CHECK(w.mult({1, 1}) == 1);
  // oracle: Kostant/Verma inclusion-exclusion
  CHECK(oracle::kostant_multiplicity(sl3, {1, 1}, {0, 0}) == 2);
  CHECK(oracle::kostant_multiplicity(sl3, {1, 1}, {1, 1}) == 1);
  CHECK(oracle::kostant_multiplicity(sl3, {1, 1}, {2, 2}) == 0);
}

TEST_CASE("Freudenthal agrees with the Kostant oracle") {
  for (const char* name : {"GL2", "GL3", "SL3", "Sp4"}) {
    RootDatum d = build_root_datum(name);
    std::vector<IntVec> lams;
    if (d.rank == 2 && d.preset_name == "GL(2)") lams = {{2, 0}, {3, 1}, {4, 0}};
    else if (d.preset_name == "GL(3)") lams = {{2, 1, 0}, {2, 0, 0}, {1, 1, 0}};
    else if (d.preset_name == "SL(3)") lams = {{1, 1}, {3, 0}, {2, 2}};
    else lams = {{1, 0}, {1, 1}, {2, 1}, {2, 2}};
    for (const auto& lam : lams) {
      WeightMultiset mine = weight_multiplicities(d, lam);
      WeightMultiset theirs = oracle::kostant_weights(d, lam);
      CHECK(mine == theirs);
      CHECK(mine.total_mass() == weyl_dim(d, lam));
    }
  }
}

TEST_CASE("weight multisets are Weyl invariant with extreme weights of mult 1") {
  RootDatum d = build_root_datum("Sp4");
  IntVec lam = {2, 1};
  WeightMultiset w = weight_multiplicities(d, lam);
  auto group = weyl_group(d);
  for (const auto& [mu, m] : w.entries()) {
    for (const auto& e : group) CHECK(w.mult(e.on_chars * mu) == m);
  }
  for (const auto& e : group) CHECK(w.mult(e.on_chars * lam) == 1);
}

TEST_CASE("restrict_to_torus is weight_multiplicities") {
  RootDatum gl2 = build_root_datum("GL2");
  CHECK(restrict_to_torus(gl2, {2, 0}) == weight_multiplicities(gl2, {2, 0}));
}

TEST_CASE("tensor: Clebsch-Gordan and small GL cases") {
  RootDatum sl2 = build_root_datum("SL2");
  auto cg = tensor_decompose(sl2, {1}, {1});
  CHECK(cg.size() == 2);
  CHECK(cg.at({2}) == 1);
  CHECK(cg.at({0}) == 1);

  RootDatum gl2 = build_root_datum("GL2");
  auto t = tensor_decompose(gl2, {1, 0}, {1, 0});
  CHECK(t.size() == 2);
  CHECK(t.at({2, 0}) == 1);
  CHECK(t.at({1, 1}) == 1);

  RootDatum sl3 = build_root_datum("SL3");
  auto u = tensor_decompose(sl3, {1, 0}, {0, 1});
  CHECK(u.size() == 2);
  CHECK(u.at({1, 1}) == 1);
  CHECK(u.at({0, 0}) == 1);
}

TEST_CASE("tensor oracle equivalence on a sampled grid") {
  // the full dim <= 200 sweep runs in the acceptance suite; spot-check here
  RootDatum sp4 = build_root_datum("Sp4");
  for (IntVec lam : {IntVec{1, 0}, IntVec{1, 1}, IntVec{2, 1}})
    for (IntVec mu : {IntVec{1, 0}, IntVec{1, 1}}) {
      auto mine = tensor_decompose(sp4, lam, mu);
      auto peeled = oracle::peel_tensor(sp4, lam, mu);
      CHECK(mine == peeled);
      Int total = 0;
      for (const auto& [hw, m] : mine) total += m * weyl_dim(sp4, hw);
      CHECK(total == weyl_dim(sp4, lam) * weyl_dim(sp4, mu));
    }
}

TEST_CASE("parabolic filtration: GSp(4)-dual standard rep under the Klingen-type parabolic") {
  RootDatum dual = build_root_datum("GSp4").dual();
  IntVec lam = {1, 1, 1};
  CHECK(weyl_dim(dual, lam) == 4);
  auto filt = parabolic_filtration(dual, lam, {0});
  REQUIRE(filt.levels.size() == 3);
  CHECK(filt.levels[0].dim == 1);
  CHECK(filt.levels[1].dim == 2);
  CHECK(filt.levels[2].dim == 1);
  // the middle level is a single 2-dimensional Levi irreducible
  CHECK(filt.levels[1].levi_irreps.size() == 1);
  CHECK(filt.levels[1].levi_irreps[0].second == 1);
}

TEST_CASE("parabolic filtration: full Levi gives one level") {
  RootDatum gl3 = build_root_datum("GL3");
  auto filt = parabolic_filtration(gl3, {2, 1, 0}, {0, 1});
  REQUIRE(filt.levels.size() == 1);
  CHECK(filt.levels[0].dim == 8);
}

TEST_CASE("parabolic filtration: GL(3) standard along alpha_1") {
  RootDatum gl3 = build_root_datum("GL3");
  auto filt = parabolic_filtration(gl3, {1, 0, 0}, {0});
  REQUIRE(filt.levels.size() == 2);
  // increasing pairing order: the character first, then the GL2 standard
  CHECK(filt.levels[0].dim == 1);
  CHECK(filt.levels[1].dim == 2);
  CHECK(filt.levels[1].levi_irreps.size() == 1);
  // levels are exactly the distinct grading values on wt(V)
  RatVec z = levi_grading_cocharacter(gl3, {0});
  std::set<std::string> values;
  WeightMultiset wt = weight_multiplicities(gl3, {1, 0, 0});
  for (const auto& [w, m] : wt.entries()) values.insert(to_string(gl3.pair(to_rat(w), z)));
  CHECK(values.size() == filt.levels.size());
}

TEST_CASE("parabolic filtration: torus Levi grades by all weights") {
  RootDatum gl2 = build_root_datum("GL2");
  auto filt = parabolic_filtration(gl2, {1, 0}, {});
  CHECK(filt.levels.size() == 2);
  for (const auto& l : filt.levels) CHECK(l.dim == 1);
}

TEST_CASE("parabolic filtration partitions the weight multiset") {
  RootDatum sp4 = build_root_datum("Sp4");
  IntVec lam = {1, 1};
  auto filt = parabolic_filtration(sp4, lam, {0});
  Int total = 0;
  RootDatum levi = build_root_datum(2, {sp4.simple_roots[0]}, {sp4.simple_coroots[0]},
                                    sp4.pairing_matrix, "levi");
  for (const auto& l : filt.levels)
    for (const auto& [hw, m] : l.levi_irreps) total += m * weyl_dim(levi, hw);
  CHECK(total == weyl_dim(sp4, lam));
}

TEST_CASE("bad Levi subset") {
  RootDatum gl3 = build_root_datum("GL3");
  CHECK_THROWS_AS(parabolic_filtration(gl3, {1, 0, 0}, {5}), Error);
  CHECK_THROWS_AS(parabolic_filtration(gl3, {0, 1, 0}, {0}), Error);  // not dominant
}
