#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "awb/subspace.hpp"

namespace awb {

/// Flat n^3 structure-constant tensor; entry (i,j,k) is the e_k-coefficient
/// of the operation applied to (e_i, e_j).
using Tensor = std::vector<Scalar>;

inline std::size_t tensor_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return (i * n + j) * n + k;
}

Tensor zero_tensor(const Field& f, std::size_t n);

struct StructureIssue {
  enum class Kind { Associativity, BracketIdentity };
  Kind kind;
  std::size_t i, j, k;
  std::string str() const;
};

struct StructureReport {
  std::vector<StructureIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

struct AwbValidationError : std::runtime_error {
  StructureReport report;
  explicit AwbValidationError(StructureReport r);
};

/// Finite-dimensional algebra with bracket: an associative product tensor and
/// a bracket tensor satisfying [ab,c] = [a,c]b + a[b,c] on all basis triples.
class Awb {
 public:
  /// Checks associativity and the bracket identity on every basis triple.
  static StructureReport check(const Field& f, std::size_t dim, const Tensor& product,
                               const Tensor& bracket);
  /// Validates and constructs; throws AwbValidationError with the full report.
  static Awb make(std::string name, const Field& f, std::size_t dim, Tensor product,
                  Tensor bracket);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor& product() const { return product_; }
  const Tensor& bracket() const { return bracket_; }

  const Scalar& product_c(std::size_t i, std::size_t j, std::size_t k) const {
    return product_[tensor_index(dim_, i, j, k)];
  }
  const Scalar& bracket_c(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_[tensor_index(dim_, i, j, k)];
  }

  Matrix basis_row(std::size_t i) const;
  /// Product u*v of two row vectors (1 x dim).
  Matrix mul(const Matrix& u, const Matrix& v) const;
  /// Bracket [u,v] of two row vectors.
  Matrix brk(const Matrix& u, const Matrix& v) const;

  bool is_abelian() const;  // both tensors zero
  /// Structural equality: field, dimension and both tensors (name ignored).
  bool same_structure(const Awb& o) const;
  Awb renamed(std::string name) const;

 private:
  Awb(std::string name, const Field& f, std::size_t dim, Tensor product, Tensor bracket);
  Matrix bilinear(const Tensor& t, const Matrix& u, const Matrix& v) const;

  std::string name_;
  Field field_;
  std::size_t dim_;
  Tensor product_, bracket_;
};

/// Linear map between algebras; matrix is dim(target) x dim(source) and acts
/// on column vectors, so rows map via (mat * v^T)^T.
struct AwbMorphism {
  Awb source;
  Awb target;
  Matrix mat;

  AwbMorphism(Awb src, Awb tgt, Matrix m);
  static AwbMorphism identity(const Awb& a);
  Matrix apply(const Matrix& row_vec) const;
  /// Image of each row of `rows`.
  Matrix apply_rows(const Matrix& rows) const;
  AwbMorphism compose(const AwbMorphism& inner) const;  // this after inner
};

struct MorphismReport {
  std::vector<std::array<std::size_t, 2>> product_failures;
  std::vector<std::array<std::size_t, 2>> bracket_failures;
  bool injective = false;
  bool surjective = false;
  bool algebra_map() const { return product_failures.empty() && bracket_failures.empty(); }
  bool isomorphism() const { return algebra_map() && injective && surjective; }
  std::string str() const;
};

/// Verifies phi(e_i e_j) = phi(e_i) phi(e_j) and the bracket analogue on all
/// basis pairs; injectivity/surjectivity come from the rank.
MorphismReport check_morphism(const AwbMorphism& phi);

struct IdealFlags {
  bool subalgebra = false;
  bool left_ideal = false;   // I A <= I and [I,A] <= I
  bool right_ideal = false;  // A I <= I and [A,I] <= I
  bool two_sided() const { return left_ideal && right_ideal; }
};

IdealFlags ideal_flags(const Awb& a, const Subspace& s);

/// Commutator ideal [[I,J]]: the span of {ij, ji, [i,j], [j,i]} closed under
/// products and brackets with elements of I and of J on both sides (closure
/// relative to I and J, not to the ambient algebra). Throws NotAnIdealError
/// unless I and J are two-sided ideals.
Subspace commutator_ideal(const Awb& a, const Subspace& i, const Subspace& j);

/// Derived algebra [[A,A]].
Subspace derived(const Awb& a);

/// Center: all a with ab = ba = 0 and [a,b] = [b,a] = 0 for every b.
Subspace center(const Awb& a);

struct Quotient {
  Awb algebra;
  AwbMorphism projection;  // ambient -> quotient
  Matrix section;          // ambient.dim x quotient.dim, right inverse of projection
};

/// Quotient by a two-sided ideal; quotient coordinates are the non-pivot
/// standard coordinates of the ideal's RREF basis.
Quotient quotient(const Awb& a, const Subspace& ideal);

Awb direct_product(const Awb& a, const Awb& b);

/// Bracket [a,b] = a D(b) - D(b) a on an associative algebra; D is any linear
/// map given as a dim x dim matrix acting on column vectors.
Awb d_bracket(std::string name, const Field& f, std::size_t dim, const Tensor& product,
              const Matrix& d);

/// d_bracket with D = identity: the commutator bracket.
Awb tautological(std::string name, const Field& f, std::size_t dim, const Tensor& product);

struct SubalgebraResult {
  Awb algebra;
  AwbMorphism inclusion;  // subalgebra -> ambient
};

/// Subspace closed under both operations, as an abstract algebra on its
/// canonical basis. Throws NotASubalgebraError when not closed.
SubalgebraResult subalgebra(const Awb& a, const Subspace& s);

}  // namespace awb
