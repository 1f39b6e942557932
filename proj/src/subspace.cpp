#include "awb/subspace.hpp"

#include <stdexcept>

namespace awb {

Subspace Subspace::span(const Matrix& rows) { return Subspace(rref(rows)); }

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return span(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  return span(Matrix::identity(f, ambient));
}

std::vector<std::size_t> Subspace::copivots() const {
  std::vector<bool> is_pivot(ambient(), false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient(); ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

Matrix Subspace::reduce(const Matrix& row_vec) const {
  if (row_vec.rows() != 1 || row_vec.cols() != ambient())
    throw std::invalid_argument("reduce expects a 1 x ambient row vector");
  Matrix v = row_vec;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = v.at(0, pivots_[r]);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient(); ++j) v.at(0, j) -= c * basis_.at(r, j);
  }
  return v;
}

bool Subspace::contains(const Matrix& row_vec) const { return reduce(row_vec).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  return span(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  // relations a*U + b*V = 0 give intersection vectors a*U
  Matrix stacked = basis_.vstack(other.basis_);
  Matrix relations = kernel(stacked.transpose());  // rows (a | b)
  Matrix vectors(field(), relations.rows(), ambient());
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    Matrix a = relations.row(r).sub_cols(0, dim());
    vectors.set_row(r, a * basis_);
  }
  return span(vectors);
}

Subspace Subspace::complement() const {
  auto co = copivots();
  Matrix rows(field(), co.size(), ambient());
  for (std::size_t r = 0; r < co.size(); ++r) rows.at(r, co[r]) = Scalar::one(field());
  return span(rows);
}

Matrix Subspace::coords(const Matrix& row_vec) const {
  Matrix c(field(), 1, dim());
  for (std::size_t r = 0; r < dim(); ++r) c.at(0, r) = row_vec.at(0, pivots_[r]);
  if (!(c * basis_ == row_vec))
    throw std::invalid_argument("vector is not a member of the subspace");
  return c;
}

Matrix Subspace::coords_rows(const Matrix& rows) const {
  Matrix out(field(), rows.rows(), dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) out.set_row(r, coords(rows.row(r)));
  return out;
}

Matrix Subspace::quotient_coords(const Matrix& row_vec) const {
  Matrix v = reduce(row_vec);
  auto co = copivots();
  Matrix out(field(), 1, co.size());
  for (std::size_t j = 0; j < co.size(); ++j) out.at(0, j) = v.at(0, co[j]);
  return out;
}

Matrix Subspace::lift_quotient(const Matrix& quot_row) const {
  auto co = copivots();
  if (quot_row.rows() != 1 || quot_row.cols() != co.size())
    throw std::invalid_argument("lift_quotient shape mismatch");
  Matrix out(field(), 1, ambient());
  for (std::size_t j = 0; j < co.size(); ++j) out.at(0, co[j]) = quot_row.at(0, j);
  return out;
}

}  // namespace awb
