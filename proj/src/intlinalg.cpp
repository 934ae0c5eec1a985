#include "workbench/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "workbench/error.hpp"

namespace wb {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    Int num = std::stoll(s.substr(0, slash));
    Int den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw Error("BadRational", "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("BadRational", "cannot parse '" + s + "'");
  } catch (const std::out_of_range&) {
    throw Error("BadRational", "out of range: '" + s + "'");
  }
}

IntVec to_int(const RatVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw Error("NotIntegral", "non-integral entry " + to_string(v[i]));
    r[i] = v[i].numerator();
  }
  return r;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Int xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

IntVec operator*(const Mat& m, const IntVec& v) {
  IntVec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

RatVec operator*(const Mat& m, const RatVec& v) {
  RatVec r(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += Rat(m(i, j)) * v[j];
  return r;
}

Mat columns(const std::vector<IntVec>& cols, int dim) {
  Mat m(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = cols[j][i];
  return m;
}

namespace {

void row_swap(Mat& m, int i, int j) {
  for (int k = 0; k < m.cols; ++k) std::swap(m(i, k), m(j, k));
}
void col_swap(Mat& m, int i, int j) {
  for (int k = 0; k < m.rows; ++k) std::swap(m(k, i), m(k, j));
}
// row i -= q * row j
void row_axpy(Mat& m, int i, int j, Int q) {
  for (int k = 0; k < m.cols; ++k) m(i, k) -= q * m(j, k);
}
void col_axpy(Mat& m, int i, int j, Int q) {
  for (int k = 0; k < m.rows; ++k) m(k, i) -= q * m(k, j);
}
void row_negate(Mat& m, int i) {
  for (int k = 0; k < m.cols; ++k) m(i, k) = -m(i, k);
}

}  // namespace

SmithForm smith_normal_form(const Mat& A) {
  SmithForm s;
  s.d = A;
  s.u = Mat::identity(A.rows);
  s.v = Mat::identity(A.cols);
  Mat& d = s.d;
  int n = std::min(A.rows, A.cols);

  for (int t = 0; t < n; ++t) {
    // find pivot of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        Int v = std::llabs(d(i, j));
        if (v != 0 && (pi < 0 || v < best)) pi = i, pj = j, best = v;
      }
    if (pi < 0) break;  // trailing block is zero
    row_swap(d, t, pi);
    row_swap(s.u, t, pi);
    col_swap(d, t, pj);
    col_swap(s.v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(s.u, i, t, q);
        if (d(i, t) != 0) {  // remainder smaller than pivot: swap up and retry
          row_swap(d, t, i);
          row_swap(s.u, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(s.v, j, t, q);
        if (d(t, j) != 0) {
          col_swap(d, t, j);
          col_swap(s.v, t, j);
          clean = false;
        }
      }
    }
    if (d(t, t) < 0) {
      row_negate(d, t);
      row_negate(s.u, t);
    }
  }
  // enforce divisibility d_t | d_{t+1}
  for (int t = 0; t + 1 < n; ++t) {
    if (d(t, t) == 0) break;
    for (int k = t + 1; k < n && d(k, k) != 0; ++k) {
      if (d(k, k) % d(t, t) == 0) continue;
      // fold d(k,k) into column t, then re-reduce the 2x2 corner
      col_axpy(d, t, k, -1);
      col_axpy(s.v, t, k, -1);
      bool clean = false;
      while (!clean) {
        clean = true;
        if (d(k, t) != 0) {
          Int q = d(k, t) / d(t, t);
          row_axpy(d, k, t, q);
          row_axpy(s.u, k, t, q);
          if (d(k, t) != 0) {
            row_swap(d, t, k);
            row_swap(s.u, t, k);
            clean = false;
            continue;
          }
        }
        if (d(t, k) != 0) {
          Int q = d(t, k) / d(t, t);
          col_axpy(d, k, t, q);
          col_axpy(s.v, k, t, q);
          if (d(t, k) != 0) {
            col_swap(d, t, k);
            col_swap(s.v, t, k);
            clean = false;
          }
        }
      }
      if (d(t, t) < 0) {
        row_negate(d, t);
        row_negate(s.u, t);
      }
      if (d(k, k) < 0) {
        row_negate(d, k);
        row_negate(s.u, k);
      }
    }
  }
  for (int t = 0; t < n && d(t, t) != 0; ++t) {
    s.divisors.push_back(d(t, t));
    ++s.rank;
  }
  return s;
}

std::optional<IntVec> solve_integral(const Mat& A, const RatVec& b) {
  SmithForm s = smith_normal_form(A);
  RatVec ub = s.u * b;
  IntVec y(A.cols, 0);
  for (int i = 0; i < A.rows; ++i) {
    if (i < s.rank) {
      Rat q = ub[i] / Rat(s.d(i, i));
      if (!is_integer(q)) return std::nullopt;
      if (i < A.cols) y[i] = q.numerator();
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

std::vector<IntVec> kernel_lattice(const Mat& A) {
  SmithForm s = smith_normal_form(A);
  std::vector<IntVec> basis;
  for (int j = s.rank; j < A.cols; ++j) {
    IntVec v(A.cols);
    for (int i = 0; i < A.cols; ++i) v[i] = s.v(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_in_span(const std::vector<IntVec>& cols, const RatVec& b) {
  size_t k = cols.size();
  size_t n = b.size();
  // Gaussian elimination on the augmented [cols | b] over Q.
  std::vector<RatVec> m(n, RatVec(k + 1, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) m[i][j] = Rat(cols[j][i]);
    m[i][k] = b[i];
  }
  std::vector<int> pivot_row(k, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < n; ++col) {
    size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[row], m[p]);
    Rat inv = m[row][col];
    for (size_t j = col; j <= k; ++j) m[row][j] /= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }
  // consistency: rows with all-zero coefficients must have zero rhs
  for (size_t i = row; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  RatVec c(k, Rat(0));
  for (size_t col = 0; col < k; ++col) {
    if (pivot_row[col] < 0) throw Error("DependentColumns", "columns not linearly independent");
    c[col] = m[pivot_row[col]][k];
  }
  return c;
}

int rational_rank(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return 0;
  size_t n = vectors[0].size();
  std::vector<RatVec> m;
  for (const auto& v : vectors) m.push_back(to_rat(v));
  int rank = 0;
  for (size_t col = 0; col < n; ++col) {
    size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == rank || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
    if (rank == static_cast<int>(m.size())) break;
  }
  return rank;
}

}  // namespace wb
