#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "awb/field.hpp"

namespace awb {

/// Dense matrix over one exact field. Row/column conventions used throughout:
/// linear maps act on column vectors (a map V -> W is dim W x dim V),
/// algebra elements and subspace bases are row vectors.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);  // zero-filled
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix row_vector(const Field& f, const std::vector<Scalar>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& at(std::size_t r, std::size_t c) const;

  Matrix row(std::size_t r) const;  // 1 x cols
  Matrix col(std::size_t c) const;  // rows x 1
  void set_row(std::size_t r, const Matrix& row_vec);

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  /// Rows of `o` appended below *this (column counts must match).
  Matrix vstack(const Matrix& o) const;
  /// Columns of `o` appended to the right (row counts must match).
  Matrix hstack(const Matrix& o) const;
  Matrix sub_cols(std::size_t first, std::size_t count) const;
  Matrix sub_rows(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;  // row-major
};

struct RrefResult {
  Matrix mat;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; zero rows dropped.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical (RREF) basis of the right null space {x : m x = 0}, one row per
/// basis vector; rows() == cols(m) - rank(m).
Matrix kernel(const Matrix& m);

/// Canonical basis of the column space, one row per basis vector.
Matrix image(const Matrix& m);

/// One solution x of m x = rhs (free variables set to zero), or nullopt when
/// the system is inconsistent. rhs may have several columns; consistency is
/// required for all of them.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace awb
