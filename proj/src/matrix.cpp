#include "awb/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace awb {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::row_vector(const Field& f, const std::vector<Scalar>& entries) {
  Matrix m(f, 1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j];
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  assert(r < rows_ && c < cols_);
  return data_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  assert(r < rows_ && c < cols_);
  return data_[r * cols_ + c];
}

Matrix Matrix::row(std::size_t r) const {
  Matrix out(field_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.at(0, j) = at(r, j);
  return out;
}

Matrix Matrix::col(std::size_t c) const {
  Matrix out(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, c);
  return out;
}

void Matrix::set_row(std::size_t r, const Matrix& row_vec) {
  assert(row_vec.rows() == 1 && row_vec.cols() == cols_);
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = row_vec.at(0, j);
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  if (!(field_ == o.field_)) throw FieldMismatchError("matrix product across fields");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix out(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
  return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix out(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
  }
  return out;
}

Matrix Matrix::sub_cols(std::size_t first, std::size_t count) const {
  assert(first + count <= cols_);
  Matrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

Matrix Matrix::sub_rows(std::size_t first, std::size_t count) const {
  assert(first + count <= rows_);
  Matrix out(field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < r.rows() && r.at(sel, c).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(lead, j));
    Scalar piv_inv = r.at(lead, c).inv();
    for (std::size_t j = c; j < r.cols(); ++j) r.at(lead, j) *= piv_inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, c).is_zero()) continue;
      Scalar factor = r.at(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {r.sub_rows(0, pivots.size()), pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::size_t k = m.cols() - r.pivots.size();
  Matrix basis(m.field(), k, m.cols());
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis.at(row, c) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      basis.at(row, r.pivots[i]) = -r.mat.at(i, c);
    ++row;
  }
  return rref(basis).mat;  // canonical form
}

Matrix image(const Matrix& m) { return rref(m.transpose()).mat; }

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve shape mismatch");
  RrefResult r = rref(m.hstack(rhs));
  Matrix x(m.field(), m.cols(), rhs.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= m.cols()) return std::nullopt;  // pivot in rhs block: inconsistent
    for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(r.pivots[i], j) = r.mat.at(i, m.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  RrefResult r = rref(m.hstack(Matrix::identity(m.field(), m.rows())));
  if (r.pivots.size() < m.rows() || (!r.pivots.empty() && r.pivots.back() >= m.cols()))
    return std::nullopt;
  return r.mat.sub_cols(m.cols(), m.cols());
}

}  // namespace awb
