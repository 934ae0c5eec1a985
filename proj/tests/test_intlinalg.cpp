#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "workbench/error.hpp"
#include "workbench/intlinalg.hpp"

using namespace wb;

TEST_CASE("rational arithmetic is exact and normalized") {
  Rat a(1, 2), b(1, 3);
  CHECK(a + b == Rat(5, 6));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 6));
  CHECK(a / b == Rat(3, 2));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(to_string(Rat(-3, 6)) == "-1/2");
  CHECK(to_string(Rat(4, 2)) == "2");
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("parse_rat") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
}

TEST_CASE("smith normal form diagonalizes with unimodular transforms") {
  Mat a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(1, 0) = 6;
  a(1, 1) = 10;
  SmithForm s = smith_normal_form(a);
  Mat lhs = s.u * a * s.v;
  CHECK(lhs == s.d);
  CHECK(s.rank == 2);
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == 2);
  CHECK(s.divisors[1] % s.divisors[0] == 0);
}

TEST_CASE("smith normal form of the PGL2 coroot matrix") {
  Mat a(1, 1);
  a(0, 0) = 2;
  SmithForm s = smith_normal_form(a);
  CHECK(s.rank == 1);
  CHECK(s.divisors[0] == 2);
}

TEST_CASE("solve_integral finds witnesses and rejects non-solvable systems") {
  Mat a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 3;
  auto x = solve_integral(a, {Rat(4), Rat(9)});
  REQUIRE(x.has_value());
  CHECK((a * *x) == IntVec{4, 9});
  CHECK_FALSE(solve_integral(a, {Rat(3), Rat(9)}).has_value());
  CHECK_FALSE(solve_integral(a, {Rat(1, 2), Rat(3)}).has_value());

  Mat b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 1;
  CHECK(solve_integral(b, {Rat(5), Rat(5)}).has_value());
  CHECK_FALSE(solve_integral(b, {Rat(5), Rat(6)}).has_value());
}

TEST_CASE("kernel_lattice spans the integer kernel") {
  Mat a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = -1;
  a(1, 1) = 1;
  a(1, 2) = -1;
  auto k = kernel_lattice(a);
  REQUIRE(k.size() == 1);
  IntVec v = k[0];
  CHECK((v == IntVec{1, 1, 1} || v == IntVec{-1, -1, -1}));
  CHECK(is_zero(a * v));
}

TEST_CASE("kernel_lattice of an empty constraint is everything") {
  Mat a(0, 3);
  CHECK(kernel_lattice(a).size() == 3);
}

TEST_CASE("solve_in_span computes exact coefficients") {
  std::vector<IntVec> cols = {{1, -1, 0}, {0, 1, -1}};
  auto c = solve_in_span(cols, {Rat(1, 2), Rat(0), Rat(-1, 2)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(1, 2));
  CHECK((*c)[1] == Rat(1, 2));
  CHECK_FALSE(solve_in_span(cols, {Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("rational_rank") {
  CHECK(rational_rank({{1, -1}}) == 1);
  CHECK(rational_rank({{1, -1}, {2, -2}}) == 1);
  CHECK(rational_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(rational_rank({}) == 0);
}
