#include "awb/isoclinism.hpp"

#include <sstream>
#include <stdexcept>

namespace awb {

namespace {

// shared per-extension data for certificate work
struct ExtContext {
  Subspace d;  // derived(G)
  CommutatorMaps cm;
  HomologySpace h1q;
  Matrix theta_m;
  Subspace ker_theta;  // subspace of H1(Q) coordinates
  Subspace n_meet_d;
};

ExtContext make_context(const CentralExtension& e) {
  Subspace d = derived(e.g());
  CommutatorMaps cm = commutator_maps(e);
  HomologySpace h1q = h1(e.q());
  Matrix th = theta(e, h1q);
  Subspace ker_th = Subspace::span(kernel(th));
  Subspace nd = e.n().intersect(d);
  return ExtContext{std::move(d), std::move(cm), std::move(h1q), std::move(th),
                    std::move(ker_th), std::move(nd)};
}

Matrix apply_map(const Matrix& m, const Matrix& row) {  // row -> (m row^T)^T
  return (m * row.transpose()).transpose();
}

// xi forced by eta on the spanning set {C1(ei,ej), P1(ei,ej)} of [[G1,G1]]
std::optional<Matrix> xi_from_eta_ctx(const CentralExtension& e1, const CentralExtension& e2,
                                      const Matrix& eta, const ExtContext& c1,
                                      const ExtContext& c2) {
  const Field& f = e1.g().field();
  std::size_t nq = e1.q().dim();
  std::size_t d1 = c1.d.dim(), d2 = c2.d.dim();

  Matrix lhs(f, 2 * nq * nq, d1), rhs(f, 2 * nq * nq, d2);
  std::size_t row = 0;
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      Matrix ei = apply_map(eta, e1.q().basis_row(i));
      Matrix ej = apply_map(eta, e1.q().basis_row(j));
      lhs.set_row(row, c1.d.coords(c1.cm.c_at(i, j)));
      rhs.set_row(row, c2.d.coords(c2.cm.c_bilinear(ei, ej)));
      lhs.set_row(row + 1, c1.d.coords(c1.cm.p_at(i, j)));
      rhs.set_row(row + 1, c2.d.coords(c2.cm.p_bilinear(ei, ej)));
      row += 2;
    }

  RrefResult r = rref(lhs.hstack(rhs));
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    if (r.pivots[k] >= d1) return std::nullopt;  // inconsistent forcing system
  if (r.pivots.size() != d1)
    throw std::logic_error("commutator values fail to span the derived subalgebra");
  // consistent and full rank: rows are [I | images]
  Matrix xi = r.mat.sub_cols(d1, d2).transpose();
  if (d1 != d2 || rank(xi) != d1) return std::nullopt;
  return xi;
}

bool kernel_theta_criterion_ctx(const CentralExtension& e1, const CentralExtension& e2,
                                const Matrix& eta, const ExtContext& c1, const ExtContext& c2) {
  AwbMorphism eta_m(e1.q(), e2.q(), eta);
  Matrix h1_map = induced_h1(eta_m, c1.h1q, c2.h1q);
  Matrix image_rows = (h1_map * c1.ker_theta.basis().transpose()).transpose();
  return Subspace::span(image_rows) == c2.ker_theta;
}

void require_iso(const CentralExtension& e1, const CentralExtension& e2, const Matrix& eta) {
  AwbMorphism m(e1.q(), e2.q(), eta);
  if (!check_morphism(m).isomorphism())
    throw NotIsoError("eta is not an algebra isomorphism of the quotients");
}

}  // namespace

std::string CertReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok ? "ok " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

CertReport verify_certificate(const CentralExtension& e1, const CentralExtension& e2,
                              const IsoclinismCertificate& cert) {
  CertReport rep;
  const Field& f = e1.g().field();
  Subspace d1 = derived(e1.g()), d2 = derived(e2.g());
  std::size_t nq = e1.q().dim();

  if (cert.eta.rows() != e2.q().dim() || cert.eta.cols() != e1.q().dim() ||
      cert.xi.rows() != d2.dim() || cert.xi.cols() != d1.dim()) {
    rep.checks.push_back({"shapes", false, "certificate matrices have wrong dimensions"});
    return rep;
  }

  AwbMorphism eta_m(e1.q(), e2.q(), cert.eta);
  MorphismReport eta_rep = check_morphism(eta_m);
  rep.checks.push_back({"eta is an algebra isomorphism", eta_rep.isomorphism(),
                        eta_rep.isomorphism() ? "" : eta_rep.str()});

  bool xi_bij = d1.dim() == d2.dim() && rank(cert.xi) == d1.dim();
  rep.checks.push_back({"xi is a linear bijection", xi_bij, ""});
  if (!eta_rep.isomorphism() || !xi_bij) return rep;

  CommutatorMaps cm1 = commutator_maps(e1), cm2 = commutator_maps(e2);
  bool c_square = true, p_square = true;
  std::string c_detail, p_detail;
  for (std::size_t i = 0; i < nq && (c_square || p_square); ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      Matrix ei = eta_m.apply(e1.q().basis_row(i));
      Matrix ej = eta_m.apply(e1.q().basis_row(j));
      Matrix c_left = apply_map(cert.xi, d1.coords(cm1.c_at(i, j)));
      Matrix c_right = d2.coords(cm2.c_bilinear(ei, ej));
      if (c_square && !(c_left == c_right)) {
        c_square = false;
        c_detail = "violated at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      Matrix p_left = apply_map(cert.xi, d1.coords(cm1.p_at(i, j)));
      Matrix p_right = d2.coords(cm2.p_bilinear(ei, ej));
      if (p_square && !(p_left == p_right)) {
        p_square = false;
        p_detail = "violated at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  rep.checks.push_back({"bracket commutator square", c_square, c_detail});
  rep.checks.push_back({"product commutator square", p_square, p_detail});

  // pi2(xi(g)) = eta(pi1(g)) on the derived subalgebra
  bool pi_compat = true;
  for (std::size_t r = 0; r < d1.dim(); ++r) {
    Matrix g2row = apply_map(cert.xi, d1.coords(d1.basis().row(r))) * d2.basis();
    if (!(e2.project(g2row) == eta_m.apply(e1.project(d1.basis().row(r))))) {
      pi_compat = false;
      break;
    }
  }
  rep.checks.push_back({"xi compatible with the projections", pi_compat, ""});

  // xi(chi1(N1) /\ D1) = chi2(N2) /\ D2
  Subspace nd1 = e1.n().intersect(d1), nd2 = e2.n().intersect(d2);
  Matrix mapped(f, nd1.dim(), e2.g().dim());
  for (std::size_t r = 0; r < nd1.dim(); ++r)
    mapped.set_row(r, apply_map(cert.xi, d1.coords(nd1.basis().row(r))) * d2.basis());
  bool kernel_compat = Subspace::span(mapped) == nd2;
  rep.checks.push_back({"xi maps kernel /\\ derived onto kernel /\\ derived", kernel_compat, ""});

  // multiplicativity of xi on the derived subalgebra (consequence of the
  // squares, asserted rather than assumed)
  bool multiplicative = true;
  for (std::size_t r = 0; r < d1.dim() && multiplicative; ++r)
    for (std::size_t s = 0; s < d1.dim(); ++s) {
      Matrix x = d1.basis().row(r), y = d1.basis().row(s);
      Matrix xi_x = apply_map(cert.xi, d1.coords(x)) * d2.basis();
      Matrix xi_y = apply_map(cert.xi, d1.coords(y)) * d2.basis();
      Matrix prod = apply_map(cert.xi, d1.coords(e1.g().mul(x, y))) * d2.basis();
      Matrix brk = apply_map(cert.xi, d1.coords(e1.g().brk(x, y))) * d2.basis();
      if (!(prod == e2.g().mul(xi_x, xi_y)) || !(brk == e2.g().brk(xi_x, xi_y))) {
        multiplicative = false;
        break;
      }
    }
  rep.checks.push_back({"xi preserves products and brackets", multiplicative, ""});
  return rep;
}

std::optional<Matrix> xi_from_eta(const CentralExtension& e1, const CentralExtension& e2,
                                  const Matrix& eta) {
  require_iso(e1, e2, eta);
  ExtContext c1 = make_context(e1), c2 = make_context(e2);
  return xi_from_eta_ctx(e1, e2, eta, c1, c2);
}

bool kernel_theta_criterion(const CentralExtension& e1, const CentralExtension& e2,
                            const Matrix& eta) {
  require_iso(e1, e2, eta);
  ExtContext c1 = make_context(e1), c2 = make_context(e2);
  return kernel_theta_criterion_ctx(e1, e2, eta, c1, c2);
}

namespace {

std::vector<Matrix> field_vectors(const Field& f, std::size_t n) {
  std::size_t p = f.prime();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > 2'000'000) throw DimensionGuardError("search space too large");
  }
  std::vector<Matrix> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Matrix v(f, 1, n);
    std::size_t rest = idx;
    for (std::size_t i = n; i-- > 0;) {  // last coordinate least significant
      v.at(0, i) = Scalar::of_int(f, static_cast<long long>(rest % p));
      rest /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// checks every structure constraint among assigned images whose support is
// already assigned; returns false on a violated constraint
bool partial_consistent(const Awb& a, const Awb& b, const std::vector<Matrix>& images,
                        std::size_t assigned) {
  const Field& f = a.field();
  for (std::size_t i = 0; i < assigned; ++i)
    for (std::size_t j = 0; j < assigned; ++j) {
      bool prod_ready = true, brk_ready = true;
      for (std::size_t k = assigned; k < a.dim(); ++k) {
        if (!a.product_c(i, j, k).is_zero()) prod_ready = false;
        if (!a.bracket_c(i, j, k).is_zero()) brk_ready = false;
      }
      if (prod_ready) {
        Matrix expected(f, 1, b.dim());
        for (std::size_t k = 0; k < assigned; ++k)
          if (!a.product_c(i, j, k).is_zero())
            expected = expected + images[k].scaled(a.product_c(i, j, k));
        if (!(b.mul(images[i], images[j]) == expected)) return false;
      }
      if (brk_ready) {
        Matrix expected(f, 1, b.dim());
        for (std::size_t k = 0; k < assigned; ++k)
          if (!a.bracket_c(i, j, k).is_zero())
            expected = expected + images[k].scaled(a.bracket_c(i, j, k));
        if (!(b.brk(images[i], images[j]) == expected)) return false;
      }
    }
  return true;
}

bool iso_backtrack(const Awb& a, const Awb& b, const std::vector<Matrix>& candidates,
                   std::vector<Matrix>& images, Matrix& stacked,
                   const std::function<bool(const Matrix&)>& visit) {
  std::size_t depth = images.size();
  if (depth == a.dim()) {
    Matrix m(a.field(), b.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t r = 0; r < b.dim(); ++r) m.at(r, i) = images[i].at(0, r);
    return visit(m);
  }
  for (const Matrix& cand : candidates) {
    Matrix trial = stacked.vstack(cand);
    if (rank(trial) != depth + 1) continue;  // keep images independent
    images.push_back(cand);
    if (partial_consistent(a, b, images, depth + 1)) {
      Matrix saved = stacked;
      stacked = trial;
      if (iso_backtrack(a, b, candidates, images, stacked, visit)) return true;
      stacked = saved;
    }
    images.pop_back();
  }
  return false;
}

}  // namespace

void for_each_algebra_iso(const Awb& a, const Awb& b,
                          const std::function<bool(const Matrix&)>& visit) {
  if (!(a.field() == b.field())) throw FieldMismatchError("isomorphism search across fields");
  if (a.field().is_rational())
    throw UnsupportedFieldError("exhaustive isomorphism search requires a prime field");
  if (a.dim() != b.dim()) return;
  if (a.dim() == 0) {
    visit(Matrix(a.field(), 0, 0));
    return;
  }
  std::vector<Matrix> candidates = field_vectors(a.field(), b.dim());
  std::vector<Matrix> images;
  Matrix stacked(a.field(), 0, b.dim());
  iso_backtrack(a, b, candidates, images, stacked, visit);
}

std::optional<AwbMorphism> search_algebra_isomorphism(const Awb& a, const Awb& b) {
  std::optional<AwbMorphism> found;
  for_each_algebra_iso(a, b, [&](const Matrix& m) {
    found = AwbMorphism(a, b, m);
    return true;
  });
  return found;
}

std::optional<ExtensionMorphism> search_extension_isomorphism(const CentralExtension& e1,
                                                              const CentralExtension& e2) {
  if (e1.n_dim() != e2.n_dim() || e1.g().dim() != e2.g().dim()) return std::nullopt;
  std::optional<ExtensionMorphism> found;
  for_each_algebra_iso(e1.g(), e2.g(), [&](const Matrix& beta_mat) {
    AwbMorphism beta(e1.g(), e2.g(), beta_mat);
    Matrix mapped = beta.apply_rows(e1.n().basis());
    if (!(Subspace::span(mapped) == e2.n())) return false;
    Matrix alpha(e1.g().field(), e2.n_dim(), e1.n_dim());
    for (std::size_t r = 0; r < e1.n_dim(); ++r) {
      Matrix coords = e2.n_coords(mapped.row(r));
      for (std::size_t s = 0; s < e2.n_dim(); ++s) alpha.at(s, r) = coords.at(0, s);
    }
    Matrix gamma_mat = e2.pi() * beta_mat * e1.section();
    AwbMorphism gamma(e1.q(), e2.q(), gamma_mat);
    ExtensionMorphism m{std::move(alpha), std::move(beta), std::move(gamma)};
    if (!check_extension_morphism(e1, e2, m).isomorphism()) return false;
    found = std::move(m);
    return true;
  });
  return found;
}

namespace {

// invariant prefilter: necessary conditions for extension isoclinism
std::optional<std::string> refute_by_invariants(const ExtContext& c1, const ExtContext& c2,
                                                const CentralExtension& e1,
                                                const CentralExtension& e2) {
  if (e1.q().dim() != e2.q().dim()) return "quotient dimensions differ";
  if (c1.d.dim() != c2.d.dim()) return "derived subalgebra dimensions differ";
  if (c1.h1q.dim() != c2.h1q.dim()) return "Schur multiplier dimensions differ";
  if (c1.ker_theta.dim() != c2.ker_theta.dim()) return "ker(theta) dimensions differ";
  if (c1.n_meet_d.dim() != c2.n_meet_d.dim()) return "kernel /\\ derived dimensions differ";
  return std::nullopt;
}

}  // namespace

Decision decide_extension_isoclinism(const CentralExtension& e1, const CentralExtension& e2,
                                     const DecideOptions& opts) {
  if (!(e1.g().field() == e2.g().field()))
    throw FieldMismatchError("isoclinism across different fields");
  ExtContext c1 = make_context(e1), c2 = make_context(e2);

  if (auto reason = refute_by_invariants(c1, c2, e1, e2))
    return Decision{DecisionStatus::NotIsoclinic, std::nullopt, *reason, 0};

  if (e1.g().field().is_rational())
    return Decision{DecisionStatus::Undecided, std::nullopt,
                    "invariants agree; certificate search needs a prime field", 0};

  if (e1.q().dim() > opts.max_dim)
    throw DimensionGuardError("quotient dimension " + std::to_string(e1.q().dim()) +
                              " exceeds the search guard " + std::to_string(opts.max_dim));

  Decision result{DecisionStatus::NotIsoclinic, std::nullopt, "", 0};
  for_each_algebra_iso(e1.q(), e2.q(), [&](const Matrix& eta) {
    ++result.searched;
    auto xi = xi_from_eta_ctx(e1, e2, eta, c1, c2);
    bool ktc = kernel_theta_criterion_ctx(e1, e2, eta, c1, c2);
    if (xi.has_value() != ktc)
      throw std::logic_error("xi forcing and kernel-theta criterion disagree");
    if (!xi) return false;
    IsoclinismCertificate cert{eta, *xi};
    CertReport rep = verify_certificate(e1, e2, cert);
    if (!rep.ok()) throw std::logic_error("searched certificate fails verification:\n" + rep.str());
    result.status = DecisionStatus::Found;
    result.certificate = std::move(cert);
    return true;
  });
  if (result.status == DecisionStatus::NotIsoclinic)
    result.reason = "no quotient isomorphism induces an isoclinism (searched " +
                    std::to_string(result.searched) + ")";
  return result;
}

Decision decide_algebra_isoclinism(const Awb& g, const Awb& h, const DecideOptions& opts) {
  Fingerprint fg = fingerprint(g), fh = fingerprint(h);
  if (!(fg == fh))
    return Decision{DecisionStatus::NotIsoclinic, std::nullopt,
                    "fingerprints differ: " + fg.str() + " vs " + fh.str(), 0};
  CentralExtension eg = CentralExtension::make(g, center(g));
  CentralExtension eh = CentralExtension::make(h, center(h));
  return decide_extension_isoclinism(eg, eh, opts);
}

std::vector<IsoSearchProbe> probe_isoclinism_search(const CentralExtension& e1,
                                                    const CentralExtension& e2) {
  ExtContext c1 = make_context(e1), c2 = make_context(e2);
  std::vector<IsoSearchProbe> probes;
  if (e1.q().dim() != e2.q().dim()) return probes;
  for_each_algebra_iso(e1.q(), e2.q(), [&](const Matrix& eta) {
    bool xi_ok = xi_from_eta_ctx(e1, e2, eta, c1, c2).has_value();
    bool ktc = kernel_theta_criterion_ctx(e1, e2, eta, c1, c2);
    probes.push_back(IsoSearchProbe{eta, xi_ok, ktc});
    return false;  // exhaust the search
  });
  return probes;
}

std::optional<Matrix> isoclinic_homomorphism_xi(const CentralExtension& e1,
                                                const CentralExtension& e2,
                                                const ExtensionMorphism& m) {
  ExtensionMorphismReport rep = check_extension_morphism(e1, e2, m);
  if (!rep.valid())
    throw std::invalid_argument("not a morphism of central extensions: " + rep.str());
  if (!rep.gamma_bijective) return std::nullopt;
  Subspace d1 = derived(e1.g()), d2 = derived(e2.g());
  Subspace ker_beta = Subspace::span(kernel(m.beta.mat));
  if (ker_beta.intersect(d1).dim() != 0) return std::nullopt;
  Matrix xi(e1.g().field(), d2.dim(), d1.dim());
  for (std::size_t r = 0; r < d1.dim(); ++r) {
    Matrix coords = d2.coords(m.beta.apply(d1.basis().row(r)));
    for (std::size_t s = 0; s < d2.dim(); ++s) xi.at(s, r) = coords.at(0, s);
  }
  return xi;
}

bool is_isoclinic_algebra_hom(const AwbMorphism& beta) {
  MorphismReport rep = check_morphism(beta);
  if (!rep.algebra_map())
    throw NotAlgebraMapError("isoclinic homomorphism test requires an algebra map:\n" + rep.str());
  Subspace ker_beta = Subspace::span(kernel(beta.mat));
  if (ker_beta.intersect(derived(beta.source)).dim() != 0) return false;
  Subspace image = Subspace::span(beta.mat.transpose());
  return image.sum(center(beta.target)).dim() == beta.target.dim();
}

ExtensionMorphism stem_isomorphism(const CentralExtension& e1, const CentralExtension& e2,
                                   const IsoclinismCertificate& cert) {
  if (!is_stem(e1) || !is_stem(e2))
    throw NotStemError("stem isomorphism requires stem extensions on both sides");
  CertReport rep = verify_certificate(e1, e2, cert);
  if (!rep.ok()) throw InvalidCertificateError("certificate fails verification:\n" + rep.str());

  const Field& f = e1.g().field();
  Subspace d1 = derived(e1.g()), d2 = derived(e2.g());
  std::size_t m = e1.n_dim(), nq = e1.q().dim();

  // kernel component of xi: N1 -> N2 (stem extensions have chi(N) inside the
  // derived subalgebra, and xi carries one kernel onto the other)
  Matrix alpha_n(f, e2.n_dim(), m);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix g2row = apply_map(cert.xi, d1.coords(e1.n().basis().row(a))) * d2.basis();
    Matrix coords = e2.n_coords(g2row);
    for (std::size_t r = 0; r < e2.n_dim(); ++r) alpha_n.at(r, a) = coords.at(0, r);
  }
  auto alpha_inv = inverse(alpha_n);
  if (!alpha_inv) throw InvalidCertificateError("xi does not map the kernel bijectively");

  FactorSet fs1 = extract_factor_set(e1);
  FactorSet fs2 = extract_factor_set(e2);

  // transported factor set: F(a,b) = xi^{-1}(h(eta a, eta b)), same for G
  FactorSet fs_fg = FactorSet::zero(e1.q(), m);
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      Matrix hval(f, 1, e2.n_dim()), kval(f, 1, e2.n_dim());
      for (std::size_t a = 0; a < nq; ++a)
        for (std::size_t b = 0; b < nq; ++b) {
          Scalar cc = cert.eta.at(a, i) * cert.eta.at(b, j);
          if (cc.is_zero()) continue;
          hval = hval + fs2.f_at(a, b).scaled(cc);
          kval = kval + fs2.g_at(a, b).scaled(cc);
        }
      fs_fg.f_at(i, j) = apply_map(*alpha_inv, hval);
      fs_fg.g_at(i, j) = apply_map(*alpha_inv, kval);
    }

  CentralExtension e1fs = build_from_factor_set(fs1);
  CentralExtension efg = build_from_factor_set(fs_fg);

  // coordinate changes onto the original algebras
  Matrix m1 = e1.chi().hstack(e1.section());                            // E1fs -> G1
  Matrix m2 = (e2.chi() * alpha_n).hstack(e2.section() * cert.eta);     // EFG -> G2
  Matrix m1_inv = *inverse(m1);
  Matrix m2_inv = *inverse(m2);

  auto through_xi = [&](const Matrix& e1fs_row) {
    Matrix g1row = apply_map(m1, e1fs_row);
    Matrix d2c = apply_map(cert.xi, d1.coords(g1row));
    Matrix g2row = d2c * d2.basis();
    return apply_map(m2_inv, g2row);  // row in EFG coordinates
  };

  // correction map d on the derived subalgebra of Q1, extended by zero on the
  // canonical complement
  Subspace dq = derived(e1.q());
  Matrix dbar(f, m, nq);
  for (std::size_t r = 0; r < dq.dim(); ++r) {
    Matrix chain(f, 1, m + nq);
    for (std::size_t j = 0; j < nq; ++j) chain.at(0, m + j) = dq.basis().at(r, j);
    Matrix img = through_xi(chain);
    for (std::size_t s = 0; s < m; ++s) dbar.at(s, dq.pivots()[r]) = img.at(0, s);
  }

  Matrix lambda(f, m + nq, m + nq);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix chain(f, 1, m + nq);
    chain.at(0, a) = Scalar::one(f);
    Matrix img = through_xi(chain);
    for (std::size_t r = 0; r < m + nq; ++r) lambda.at(r, a) = img.at(0, r);
  }
  for (std::size_t j = 0; j < nq; ++j) {
    for (std::size_t s = 0; s < m; ++s) lambda.at(s, m + j) = dbar.at(s, j);
    lambda.at(m + j, m + j) = Scalar::one(f);
  }

  Matrix beta_mat = m2 * lambda * m1_inv;
  AwbMorphism beta(e1.g(), e2.g(), beta_mat);
  Matrix alpha_fin(f, e2.n_dim(), m);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix coords = e2.n_coords(beta.apply(e1.n().basis().row(a)));
    for (std::size_t r = 0; r < e2.n_dim(); ++r) alpha_fin.at(r, a) = coords.at(0, r);
  }
  AwbMorphism gamma(e1.q(), e2.q(), cert.eta);
  ExtensionMorphism out{std::move(alpha_fin), std::move(beta), std::move(gamma)};
  if (!check_extension_morphism(e1, e2, out).isomorphism())
    throw std::logic_error("constructed stem isomorphism fails verification");
  return out;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "(" << central_quotient_dim << "," << derived_dim << "," << quotient_derived_dim << ","
     << center_meet_derived_dim << "," << theta_q_rank << ")";
  return os.str();
}

Fingerprint fingerprint(const Awb& g) {
  Subspace z = center(g), d = derived(g);
  Quotient quot = quotient(g, z);
  ThetaQ tq = theta_q(g);
  Fingerprint fp;
  fp.central_quotient_dim = quot.algebra.dim();
  fp.derived_dim = d.dim();
  fp.quotient_derived_dim = derived(quot.algebra).dim();
  fp.center_meet_derived_dim = z.intersect(d).dim();
  fp.theta_q_rank = rank(tq.map_to_q);
  return fp;
}

}  // namespace awb
