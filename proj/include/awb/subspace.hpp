#pragma once

#include <vector>

#include "awb/matrix.hpp"

namespace awb {

/// Subspace of F^n in canonical form: the RREF basis with pivot-ordered rows.
/// Canonical form makes equality a plain matrix comparison.
class Subspace {
 public:
  static Subspace span(const Matrix& rows);
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Ambient coordinates without a pivot; index the canonical complement.
  std::vector<std::size_t> copivots() const;

  bool contains(const Matrix& row_vec) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Span of the standard basis vectors at non-pivot coordinates.
  Subspace complement() const;

  /// Coordinates of a member vector in the canonical basis (pivot read-off).
  /// Throws std::invalid_argument when the vector is not a member.
  Matrix coords(const Matrix& row_vec) const;
  /// Batched coords: one input row per output row.
  Matrix coords_rows(const Matrix& rows) const;

  /// row_vec minus its projection onto this subspace: the unique
  /// representative with zeros at all pivot coordinates.
  Matrix reduce(const Matrix& row_vec) const;
  /// Coordinates of the class of row_vec in F^n / this, read at copivots.
  Matrix quotient_coords(const Matrix& row_vec) const;
  /// Canonical section of the quotient map: places coordinates at copivots.
  Matrix lift_quotient(const Matrix& quot_row) const;

  std::string str() const { return basis_.str(); }

 private:
  explicit Subspace(RrefResult r) : basis_(std::move(r.mat)), pivots_(std::move(r.pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace awb
