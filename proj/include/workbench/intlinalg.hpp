#pragma once

#include <optional>
#include <vector>

#include "workbench/numeric.hpp"

namespace wb {

// Dense integer matrix, row major.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  Mat transpose() const;

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat operator*(const Mat& x, const Mat& y);
IntVec operator*(const Mat& m, const IntVec& v);
RatVec operator*(const Mat& m, const RatVec& v);

// Builds the matrix whose columns are the given vectors (all of equal length).
Mat columns(const std::vector<IntVec>& cols, int dim);

// Smith normal form: U*A*V = D with U, V unimodular, D diagonal with
// d_1 | d_2 | ... | d_r, d_i >= 0.  rank = number of nonzero d_i.
struct SmithForm {
  Mat u, v, d;
  int rank = 0;
  std::vector<Int> divisors;  // d_1..d_r
};
SmithForm smith_normal_form(const Mat& A);

// Does A x = b admit an integral solution x?  b may be rational; entries of
// any solution candidate are checked for exact divisibility.
std::optional<IntVec> solve_integral(const Mat& A, const RatVec& b);

// Basis of { x in Z^cols : A x = 0 }.  The lattice is saturated.
std::vector<IntVec> kernel_lattice(const Mat& A);

// Unique rational solution of A x = b restricted to the column span:
// returns coefficients c with sum c_j * col_j = b, or nullopt if b is not in
// the span.  Columns must be linearly independent.
std::optional<RatVec> solve_in_span(const std::vector<IntVec>& cols, const RatVec& b);

// Rank over Q.
int rational_rank(const std::vector<IntVec>& vectors);

}  // namespace wb
