#pragma once

// Dense exact matrices: integer matrices with Smith normal form, and the
// rational row reduction used throughout the library.

#include <algorithm>
#include <string>
#include <vector>

#include "tropsev/arith.hpp"

namespace tropsev {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw SchemaError("ragged matrix literal");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw InvariantBreach("matrix dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

  std::vector<std::vector<Integer>> to_rows() const {
    std::vector<std::vector<Integer>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * m * V == diag, with U, V unimodular and d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntegerMatrix left;             // U
  IntegerMatrix right;            // V
  IntegerMatrix diag;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
  }
  /// Product of the nonzero invariant factors.
  Integer nonzero_product() const {
    Integer p = 1;
    for (const auto& d : diagonal)
      if (d != 0) p *= d;
    return p;
  }
};

namespace detail {

// Replace rows (i, j) by the unimodular combination that puts gcd(a(i,c), a(j,c))
// at (i, c) and zero at (j, c). The same operation is applied to u.
inline void gcd_rows(IntegerMatrix& a, IntegerMatrix& u, std::size_t i, std::size_t j,
                     std::size_t c) {
  const Integer x = a(i, c), y = a(j, c);
  Integer g, s, t;
  // Plain elimination when x divides y; a Bezout pair with s = 0 would only swap.
  if (x != 0 && y % x == 0) {
    g = x;
    s = 1;
    t = 0;
  } else {
    extended_gcd(x, y, g, s, t);
  }
  const Integer xg = x / g, yg = y / g;
  auto apply = [&](IntegerMatrix& m) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Integer mi = m(i, k), mj = m(j, k);
      m(i, k) = s * mi + t * mj;
      m(j, k) = xg * mj - yg * mi;
    }
  };
  apply(a);
  apply(u);
}

inline void gcd_cols(IntegerMatrix& a, IntegerMatrix& v, std::size_t i, std::size_t j,
                     std::size_t r) {
  const Integer x = a(r, i), y = a(r, j);
  Integer g, s, t;
  // Plain elimination when x divides y; a Bezout pair with s = 0 would only swap.
  if (x != 0 && y % x == 0) {
    g = x;
    s = 1;
    t = 0;
  } else {
    extended_gcd(x, y, g, s, t);
  }
  const Integer xg = x / g, yg = y / g;
  auto apply = [&](IntegerMatrix& m) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      const Integer mi = m(k, i), mj = m(k, j);
      m(k, i) = s * mi + t * mj;
      m(k, j) = xg * mj - yg * mi;
    }
  };
  apply(a);
  apply(v);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: entry of least nonzero absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) detail::gcd_rows(a, u, t, i, t);
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(t, j) != 0) detail::gcd_cols(a, v, t, j, t);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) column_clear = false;
      if (!column_clear) continue;
      // Divisibility: fold any offending row into row t and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = 0; k < cols; ++k) a(t, k) += a(i, k);
            for (std::size_t k = 0; k < rows; ++k) u(t, k) += u(i, k);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t k = 0; k < cols; ++k) a(t, k) = -a(t, k);
      for (std::size_t k = 0; k < rows; ++k) u(t, k) = -u(t, k);
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(u);
  out.right = std::move(v);
  out.diag = std::move(a);
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvariantBreach("determinant of a non-square matrix");
  if (n == 0) return 1;
  int s = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return s * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Rational row reduction.

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

/// In-place reduced row echelon form over the first `cols` columns; returns
/// pivot columns. Rows beyond the rank end up zero (in those columns).
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).size();
}

inline std::size_t rank(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), RationalRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
  return rank(std::move(r));
}

/// Affine parametrisation {x : A x = b} = { origin + sum_k t_k basis[k] }.
struct AffineSolution {
  bool consistent = false;
  RationalRow origin;
  std::vector<RationalRow> basis;
};

/// Solves A x = b given as rows [a_1 .. a_n | b].
inline AffineSolution solve_affine(RationalMatrix augmented, std::size_t n) {
  AffineSolution out;
  const auto pivots = row_reduce(augmented, n);
  for (std::size_t i = pivots.size(); i < augmented.size(); ++i)
    if (augmented[i][n] != 0) return out;
  out.consistent = true;
  out.origin.assign(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.origin[pivots[i]] = augmented[i][n];
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalRow dir(n, Rational(0));
    dir[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) dir[pivots[i]] = -augmented[i][f];
    out.basis.push_back(std::move(dir));
  }
  return out;
}

}  // namespace tropsev
