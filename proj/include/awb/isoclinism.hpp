#pragma once

#include <functional>
#include <optional>

#include "awb/factor_set.hpp"
#include "awb/homology.hpp"

namespace awb {

/// Witness of an isoclinism between central extensions: eta is an algebra
/// isomorphism of the quotients, xi a linear bijection of the derived
/// subalgebras written in their canonical RREF coordinates, and the two
/// commutator-map squares commute.
struct IsoclinismCertificate {
  Matrix eta;  // dim Q2 x dim Q1
  Matrix xi;   // dim [[G2,G2]] x dim [[G1,G1]]
};

struct CertCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct CertReport {
  std::vector<CertCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::string str() const;
};

/// Full certificate verification: eta an algebra isomorphism, xi bijective,
/// both commutator squares, compatibility of xi with the projections and the
/// kernels, and multiplicativity of xi on the derived subalgebra.
CertReport verify_certificate(const CentralExtension& e1, const CentralExtension& e2,
                              const IsoclinismCertificate& cert);

/// The unique candidate xi forced by eta on the commutator-map values, when
/// the forcing system is consistent and bijective; nothing otherwise.
/// Throws NotIsoError when eta is not an algebra isomorphism.
std::optional<Matrix> xi_from_eta(const CentralExtension& e1, const CentralExtension& e2,
                                  const Matrix& eta);

/// Whether the induced map on first homology carries ker theta(E1) exactly
/// onto ker theta(E2); equivalent to eta inducing an isoclinism.
bool kernel_theta_criterion(const CentralExtension& e1, const CentralExtension& e2,
                            const Matrix& eta);

enum class DecisionStatus { Found, NotIsoclinic, Undecided };

struct Decision {
  DecisionStatus status;
  std::optional<IsoclinismCertificate> certificate;
  std::string reason;
  std::size_t searched = 0;  // quotient isomorphisms examined
};

struct DecideOptions {
  std::size_t max_dim = 5;  // guard for the exhaustive search
};

/// Exhaustive certificate search over a prime field; over the rationals only
/// invariant-based refutation is attempted and the result may be Undecided.
/// Every searched isomorphism is cross-checked against the kernel-theta
/// criterion. Throws DimensionGuardError when the quotient is too large.
Decision decide_extension_isoclinism(const CentralExtension& e1, const CentralExtension& e2,
                                     const DecideOptions& opts = {});

/// Isoclinism of algebras: decided on the central extensions by the centers.
Decision decide_algebra_isoclinism(const Awb& g, const Awb& h, const DecideOptions& opts = {});

/// For a homomorphism of central extensions: gamma bijective and
/// ker(beta) /\ [[G1,G1]] = 0. Returns the forced xi (the restriction of
/// beta to the derived subalgebra, in canonical coordinates) when isoclinic.
std::optional<Matrix> isoclinic_homomorphism_xi(const CentralExtension& e1,
                                                const CentralExtension& e2,
                                                const ExtensionMorphism& m);

/// Algebra-level test: ker(beta) /\ [[G,G]] = 0 and im(beta) + Z(H) = H.
/// Throws NotAlgebraMapError.
bool is_isoclinic_algebra_hom(const AwbMorphism& beta);

/// Constructive isomorphism between isoclinic stem extensions: transports the
/// factor set of e2 along the certificate, matches it with the factor set of
/// e1 through a correction map on the derived subalgebra of the quotient, and
/// assembles the total isomorphism. Throws NotStemError /
/// InvalidCertificateError.
ExtensionMorphism stem_isomorphism(const CentralExtension& e1, const CentralExtension& e2,
                                   const IsoclinismCertificate& cert);

/// Isoclinism invariants of an algebra; equality is necessary for isoclinic
/// algebras and is used as a search prefilter.
struct Fingerprint {
  std::size_t central_quotient_dim = 0;     // dim G/Z(G)
  std::size_t derived_dim = 0;              // dim [[G,G]]
  std::size_t quotient_derived_dim = 0;     // dim [[G/Z, G/Z]]
  std::size_t center_meet_derived_dim = 0;  // dim Z(G) /\ [[G,G]]
  std::size_t theta_q_rank = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

Fingerprint fingerprint(const Awb& g);

/// Enumerates algebra isomorphisms a -> b over a prime field in lexicographic
/// order of the image tuples; visit returning true stops the enumeration.
/// Throws UnsupportedFieldError over the rationals.
void for_each_algebra_iso(const Awb& a, const Awb& b,
                          const std::function<bool(const Matrix&)>& visit);

std::optional<AwbMorphism> search_algebra_isomorphism(const Awb& a, const Awb& b);

/// Exhaustive extension-isomorphism search (beta ranging over algebra
/// isomorphisms G1 -> G2 mapping chi(N1) onto chi(N2)).
std::optional<ExtensionMorphism> search_extension_isomorphism(const CentralExtension& e1,
                                                              const CentralExtension& e2);

/// One record per searched quotient isomorphism, with both isoclinism
/// criteria evaluated independently.
struct IsoSearchProbe {
  Matrix eta;
  bool xi_ok;
  bool kernel_theta_ok;
};

std::vector<IsoSearchProbe> probe_isoclinism_search(const CentralExtension& e1,
                                                    const CentralExtension& e2);

}  // namespace awb
