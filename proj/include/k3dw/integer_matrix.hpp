#pragma once

// Small dense exact matrices and the unimodular reductions built on them.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "k3dw/error.hpp"

namespace k3dw {

template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    for (auto& x : data_) x = 0;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RationalMatrix = Matrix<mpq_class>;

/// A unimodular change of basis whose first column is a given primitive
/// vector p: `basis * e_1 == p` and `inverse * basis == I`.
struct UnimodularFrame {
  IntMatrix basis;    // columns are the new basis vectors
  IntMatrix inverse;  // maps standard coordinates to coordinates in `basis`
};

/// Completes a primitive integer vector to a basis of Z^n by Euclidean
/// reduction of p to e_1. Every row operation applied to p is recorded in
/// `inverse`; its inverse column operation is recorded in `basis`.
inline UnimodularFrame complete_to_unimodular(const std::vector<mpz_class>& p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty vector");
  std::vector<mpz_class> x = p;
  UnimodularFrame frame{IntMatrix::identity(n), IntMatrix::identity(n)};

  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      if (pivot == n || abs(x[i]) < abs(x[pivot])) pivot = i;
    }
    if (pivot == n) throw Error(ErrorCode::not_primitive, "zero vector has no unimodular completion");
    bool reduced = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot || x[j] == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), x[j].get_mpz_t(), x[pivot].get_mpz_t());
      if (q != 0) {
        x[j] -= q * x[pivot];
        frame.inverse.add_row_multiple(j, pivot, -q);
        frame.basis.add_col_multiple(pivot, j, q);
      }
      if (x[j] != 0) reduced = false;
    }
    if (!reduced) continue;
    if (pivot != 0) {
      std::swap(x[0], x[pivot]);
      frame.inverse.swap_rows(0, pivot);
      frame.basis.swap_cols(0, pivot);
    }
    break;
  }
  if (abs(x[0]) != 1) throw Error(ErrorCode::not_primitive, "vector content is " + mpz_class(abs(x[0])).get_str());
  if (x[0] < 0) {
    frame.inverse.negate_row(0);
    frame.basis.negate_col(0);
  }
  return frame;
}

/// Result of column-echelon reduction A * transform = [echelon | 0].
struct ColumnEchelon {
  IntMatrix echelon;                 // rows(A) x rank, column echelon form
  IntMatrix transform;               // unimodular, cols(A) x cols(A)
  std::vector<std::size_t> pivot_rows;  // pivot row of each echelon column
  std::size_t rank = 0;
};

/// Unimodular column reduction of an integer matrix. The trailing
/// cols(A) - rank columns of `transform` are a basis of the integer kernel,
/// which is saturated in Z^cols(A).
inline ColumnEchelon column_echelon(IntMatrix a) {
  const std::size_t n = a.cols();
  ColumnEchelon out;
  out.transform = IntMatrix::identity(n);
  std::size_t next = 0;
  for (std::size_t r = 0; r < a.rows() && next < n; ++r) {
    for (;;) {
      std::size_t pivot = n;
      for (std::size_t c = next; c < n; ++c) {
        if (a(r, c) == 0) continue;
        if (pivot == n || abs(a(r, c)) < abs(a(r, pivot))) pivot = c;
      }
      if (pivot == n) break;
      bool reduced = true;
      for (std::size_t c = next; c < n; ++c) {
        if (c == pivot || a(r, c) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(r, pivot).get_mpz_t());
        if (q != 0) {
          a.add_col_multiple(c, pivot, -q);
          out.transform.add_col_multiple(c, pivot, -q);
        }
        if (a(r, c) != 0) reduced = false;
      }
      if (!reduced) continue;
      a.swap_cols(next, pivot);
      out.transform.swap_cols(next, pivot);
      out.pivot_rows.push_back(r);
      ++next;
      break;
    }
  }
  out.rank = next;
  out.echelon = IntMatrix(a.rows(), out.rank);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < out.rank; ++c) out.echelon(r, c) = a(r, c);
  return out;
}

/// Determinant by fraction-free elimination (Bareiss); exact for integer input.
inline mpz_class determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::invalid_argument, "determinant of a non-square matrix");
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace k3dw
