#pragma once

#include "awb/algebra.hpp"

namespace awb {

/// Central extension 0 -> N -> G -> Q -> 0 with a fixed linear section of pi.
/// N is stored as a subspace of G in canonical form; the section lifts along
/// the canonical complement of N (non-pivot standard coordinates).
class CentralExtension {
 public:
  /// Builds the canonical quotient Q = G/N. Throws NotAnIdealError /
  /// NotCentralError (the latter reports a violating pair).
  static CentralExtension make(const Awb& g, const Subspace& n);
  /// Wraps an externally constructed quotient: pi must be a surjective
  /// algebra map with kernel exactly n, and n must be central.
  static CentralExtension from_parts(Awb g, Subspace n, Awb q, Matrix pi);

  const Awb& g() const { return g_; }
  const Awb& q() const { return q_; }
  const Subspace& n() const { return n_; }
  std::size_t n_dim() const { return n_.dim(); }
  const Matrix& pi() const { return pi_; }
  const Matrix& chi() const { return chi_; }
  const Matrix& section() const { return section_; }

  /// Section applied to a quotient row vector.
  Matrix lift(const Matrix& q_row) const;
  /// Projection applied to an algebra row vector.
  Matrix project(const Matrix& g_row) const;
  /// Coordinates of a kernel member in the canonical basis of N.
  Matrix n_coords(const Matrix& g_row) const;

 private:
  CentralExtension(Awb g, Subspace n, Awb q, Matrix pi, Matrix chi, Matrix section);
  Awb g_, q_;
  Subspace n_;
  Matrix pi_, chi_, section_;
};

/// The commutator maps C(q,q') = [g,g'] and P(q,q') = g g' on section lifts;
/// well-defined for central extensions independently of the lift.
struct CommutatorMaps {
  std::size_t q_dim;
  std::size_t g_dim;
  std::vector<Matrix> c, p;  // values in G coordinates, index i*q_dim+j

  const Matrix& c_at(std::size_t i, std::size_t j) const { return c[i * q_dim + j]; }
  const Matrix& p_at(std::size_t i, std::size_t j) const { return p[i * q_dim + j]; }
  Matrix c_bilinear(const Matrix& u, const Matrix& v) const;
  Matrix p_bilinear(const Matrix& u, const Matrix& v) const;
};

CommutatorMaps commutator_maps(const CentralExtension& e);

/// Morphism of central extensions (alpha, beta, gamma): beta on total
/// algebras, gamma on quotients, alpha on kernels in canonical N-coordinates.
struct ExtensionMorphism {
  Matrix alpha;      // dim N2 x dim N1
  AwbMorphism beta;  // G1 -> G2
  AwbMorphism gamma; // Q1 -> Q2
};

struct ExtensionMorphismReport {
  bool beta_algebra_map = false, gamma_algebra_map = false;
  bool alpha_square = false, gamma_square = false;
  bool alpha_bijective = false, beta_bijective = false, gamma_bijective = false;
  bool valid() const {
    return beta_algebra_map && gamma_algebra_map && alpha_square && gamma_square;
  }
  bool isomorphism() const {
    return valid() && alpha_bijective && beta_bijective && gamma_bijective;
  }
  std::string str() const;
};

ExtensionMorphismReport check_extension_morphism(const CentralExtension& e1,
                                                 const CentralExtension& e2,
                                                 const ExtensionMorphism& m);

ExtensionMorphism identity_extension_morphism(const CentralExtension& e);
/// Composition m2 after m1. Shapes must match.
ExtensionMorphism compose_extension_morphisms(const ExtensionMorphism& m2,
                                              const ExtensionMorphism& m1);

/// Stem extension test: chi(N) contained in the derived subalgebra.
bool is_stem(const CentralExtension& e);

/// Stem cover test: the connecting map theta is bijective.
bool is_stem_cover(const CentralExtension& e);

struct StemifyResult {
  CentralExtension stem;
  ExtensionMorphism projection;  // input -> stem
  Subspace removed;              // the ideal M that was quotiented out
};

/// Quotients out a complement M of chi(N) /\ [[G,G]] inside chi(N); the result
/// is a stem extension over the same Q and the projection is an isoclinic
/// epimorphism. M = 0 returns the input unchanged.
StemifyResult stemify(const CentralExtension& e);

struct SplitOffResult {
  CentralExtension stem_part;
  Awb abelian_part;
  AwbMorphism iso;  // direct_product(stem_part.g, abelian_part) -> g
};

/// Internal direct decomposition G = T + M with [[G,G]] <= T and M a central
/// complement: the extension restricted to T is stem, M is abelian.
SplitOffResult split_off_abelian(const CentralExtension& e);

struct DirectSumResult {
  CentralExtension ext;
  ExtensionMorphism projection;  // ext -> input
};

/// Extension with kernel N + A over the same Q, A abelian.
DirectSumResult direct_sum_abelian(const CentralExtension& e, const Awb& abelian);

struct PullbackResult {
  CentralExtension ext;              // over eta's source
  ExtensionMorphism from_original;   // input extension -> ext
};

/// Backward induced extension along an isomorphism eta : Q1 -> Q2 = e.q:
/// total algebra {(g,q) : pi(g) = eta(q)} inside G x Q1.
PullbackResult pullback(const CentralExtension& e, const AwbMorphism& eta);

struct AncestorResult {
  CentralExtension ancestor;  // over Q1, kernel N1 x N2
  ExtensionMorphism to_first, to_second;
};

/// Fibre product {(g1,g2) : eta(pi1(g1)) = pi2(g2)} with the two coordinate
/// projections; when eta underlies an isoclinism both are isoclinic
/// epimorphisms.
AncestorResult common_ancestor(const CentralExtension& e1, const CentralExtension& e2,
                               const AwbMorphism& eta);

}  // namespace awb
