#pragma once

#include "awb/extension.hpp"

namespace awb {

/// Chain complex of an algebra with bracket in degrees <= 2. The degree-n
/// module is spanned by one tensor block and one circle block: C0 = A,
/// C1 = (A@A) + (AoA), C2 = (A@A@A) + (AoAoA). Boundaries act on columns:
///   d0(ei@ej) = ei ej            d0(eioej) = [ei,ej]
///   d1(ei@ej@ek) = (ei ej)@ek - ei@(ej ek)
///   d1(eioejoek) = [ei,ek]@ej + ei@[ej,ek] - (ei ej)oek
/// Basis order: tensor block first, then circle block, each lexicographic.
struct ChainSlice {
  Awb algebra;
  Matrix d0;  // n x 2n^2
  Matrix d1;  // 2n^2 x 2n^3

  static std::size_t tensor_pos(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }
  static std::size_t circle_pos(std::size_t n, std::size_t i, std::size_t j) {
    return n * n + i * n + j;
  }
};

ChainSlice chain_slice(const Awb& a);

/// Homology space in degree 0 or 1 with deterministic representative cycles:
/// the greedy RREF-basis complement of the boundary space inside the cycle
/// space.
class HomologySpace {
 public:
  HomologySpace(int degree, Subspace cycles, Subspace boundaries);

  int degree() const { return degree_; }
  std::size_t chain_dim() const { return cycles_.ambient(); }
  std::size_t dim() const { return representatives_.rows(); }
  const Matrix& representatives() const { return representatives_; }
  const Subspace& boundaries() const { return boundaries_; }
  const Subspace& cycles() const { return cycles_; }

  /// Class coordinates of cycle row vectors (one input row per output row).
  /// Throws std::invalid_argument when a row is not a cycle.
  Matrix coords_of(const Matrix& cycle_rows) const;
  /// The chain representative of class coordinates.
  Matrix chain_of(const Matrix& class_row) const;

 private:
  int degree_;
  Subspace cycles_, boundaries_;
  Matrix representatives_;
};

HomologySpace h0(const Awb& a);
HomologySpace h1(const Awb& a);

/// Chain-level map C1(source) -> C1(target) of an algebra map: both blocks
/// transform by the Kronecker square of the matrix.
Matrix chain_map_c1(const AwbMorphism& phi);

/// Induced map on first homology, as a dim H1(target) x dim H1(source)
/// matrix in representative coordinates. Throws NotAlgebraMapError.
Matrix induced_h1(const AwbMorphism& phi, const HomologySpace& h1_src,
                  const HomologySpace& h1_dst);
Matrix induced_h1(const AwbMorphism& phi);

/// Value of a degree-1 chain under section lifts: products and brackets of
/// lifted basis vectors, combined with the chain coefficients; lands in
/// chi(N) for cycles.
Matrix theta_chain_value(const CentralExtension& e, const Matrix& c1_row);

/// Connecting map of the five-term exact sequence for a central extension,
/// as a dim N x dim H1(Q) matrix in representative coordinates.
Matrix theta(const CentralExtension& e, const HomologySpace& h1_q);
Matrix theta(const CentralExtension& e);

struct ThetaQ {
  CentralExtension e_q;   // 0 -> Z(Q) -> Q -> Q/Z(Q) -> 0
  HomologySpace h1_qz;    // H1(Q/Z(Q))
  Matrix map_to_q;        // dim Q x dim H1(Q/Z(Q)); image = [[Q,Q]] /\ Z(Q)
};

/// theta of the central extension by the center, followed by the inclusion
/// Z(Q) -> Q.
ThetaQ theta_q(const Awb& q);

}  // namespace awb
