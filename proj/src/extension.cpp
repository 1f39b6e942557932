#include "awb/extension.hpp"

#include <sstream>
#include <stdexcept>

#include "awb/homology.hpp"

namespace awb {

CentralExtension::CentralExtension(Awb g, Subspace n, Awb q, Matrix pi, Matrix chi, Matrix section)
    : g_(std::move(g)),
      q_(std::move(q)),
      n_(std::move(n)),
      pi_(std::move(pi)),
      chi_(std::move(chi)),
      section_(std::move(section)) {}

CentralExtension CentralExtension::make(const Awb& g, const Subspace& n) {
  Quotient quot = quotient(g, n);  // throws NotAnIdealError
  return from_parts(g, n, quot.algebra, quot.projection.mat);
}

CentralExtension CentralExtension::from_parts(Awb g, Subspace n, Awb q, Matrix pi) {
  if (n.ambient() != g.dim()) throw std::invalid_argument("kernel ambient mismatch");
  if (pi.rows() != q.dim() || pi.cols() != g.dim())
    throw std::invalid_argument("pi must be dim(Q) x dim(G)");

  // centrality: every kernel vector annihilates every basis vector
  for (std::size_t r = 0; r < n.dim(); ++r) {
    Matrix v = n.basis().row(r);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Matrix e = g.basis_row(i);
      if (!g.mul(v, e).is_zero() || !g.mul(e, v).is_zero() || !g.brk(v, e).is_zero() ||
          !g.brk(e, v).is_zero()) {
        std::ostringstream os;
        os << "kernel is not central: basis vector " << r << " of N and e_" << i
           << " have a nonzero product or bracket";
        throw NotCentralError(os.str());
      }
    }
  }

  AwbMorphism pi_m(g, q, pi);
  MorphismReport rep = check_morphism(pi_m);
  if (!rep.algebra_map() || !rep.surjective)
    throw std::invalid_argument("pi is not a surjective algebra map:\n" + rep.str());
  if (Subspace::span(kernel(pi)) != n)
    throw std::invalid_argument("kernel of pi differs from the given subspace");

  Matrix chi = n.basis().transpose();

  // deterministic section along the canonical complement of N
  auto co = n.copivots();
  Matrix pi_c(g.field(), q.dim(), co.size());
  for (std::size_t a = 0; a < co.size(); ++a)
    for (std::size_t r = 0; r < q.dim(); ++r) pi_c.at(r, a) = pi.at(r, co[a]);
  auto inv = inverse(pi_c);
  if (!inv) throw std::logic_error("pi restricted to the complement of N must be invertible");
  Matrix section(g.field(), g.dim(), q.dim());
  for (std::size_t a = 0; a < co.size(); ++a)
    for (std::size_t j = 0; j < q.dim(); ++j) section.at(co[a], j) = inv->at(a, j);

  return CentralExtension(std::move(g), std::move(n), std::move(q), std::move(pi),
                          std::move(chi), std::move(section));
}

Matrix CentralExtension::lift(const Matrix& q_row) const {
  return (section_ * q_row.transpose()).transpose();
}

Matrix CentralExtension::project(const Matrix& g_row) const {
  return (pi_ * g_row.transpose()).transpose();
}

Matrix CentralExtension::n_coords(const Matrix& g_row) const { return n_.coords(g_row); }

Matrix CommutatorMaps::c_bilinear(const Matrix& u, const Matrix& v) const {
  Matrix out(u.field(), 1, g_dim);
  for (std::size_t i = 0; i < q_dim; ++i)
    for (std::size_t j = 0; j < q_dim; ++j) {
      Scalar s = u.at(0, i) * v.at(0, j);
      if (!s.is_zero()) out = out + c_at(i, j).scaled(s);
    }
  return out;
}

Matrix CommutatorMaps::p_bilinear(const Matrix& u, const Matrix& v) const {
  Matrix out(u.field(), 1, g_dim);
  for (std::size_t i = 0; i < q_dim; ++i)
    for (std::size_t j = 0; j < q_dim; ++j) {
      Scalar s = u.at(0, i) * v.at(0, j);
      if (!s.is_zero()) out = out + p_at(i, j).scaled(s);
    }
  return out;
}

CommutatorMaps commutator_maps(const CentralExtension& e) {
  std::size_t nq = e.q().dim();
  CommutatorMaps maps{nq, e.g().dim(), {}, {}};
  std::vector<Matrix> lifts;
  for (std::size_t i = 0; i < nq; ++i) lifts.push_back(e.lift(e.q().basis_row(i)));
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      maps.c.push_back(e.g().brk(lifts[i], lifts[j]));
      maps.p.push_back(e.g().mul(lifts[i], lifts[j]));
    }
  return maps;
}

std::string ExtensionMorphismReport::str() const {
  std::ostringstream os;
  os << "beta algebra map: " << beta_algebra_map << ", gamma algebra map: " << gamma_algebra_map
     << ", alpha square: " << alpha_square << ", gamma square: " << gamma_square
     << ", bijective(a,b,g): " << alpha_bijective << beta_bijective << gamma_bijective;
  return os.str();
}

ExtensionMorphismReport check_extension_morphism(const CentralExtension& e1,
                                                 const CentralExtension& e2,
                                                 const ExtensionMorphism& m) {
  ExtensionMorphismReport r;
  r.beta_algebra_map = check_morphism(m.beta).algebra_map();
  r.gamma_algebra_map = check_morphism(m.gamma).algebra_map();
  r.alpha_square = (m.beta.mat * e1.chi() == e2.chi() * m.alpha);
  r.gamma_square = (m.gamma.mat * e1.pi() == e2.pi() * m.beta.mat);
  r.alpha_bijective = (m.alpha.rows() == m.alpha.cols() && rank(m.alpha) == m.alpha.rows());
  r.beta_bijective =
      (m.beta.mat.rows() == m.beta.mat.cols() && rank(m.beta.mat) == m.beta.mat.rows());
  r.gamma_bijective =
      (m.gamma.mat.rows() == m.gamma.mat.cols() && rank(m.gamma.mat) == m.gamma.mat.rows());
  return r;
}

ExtensionMorphism identity_extension_morphism(const CentralExtension& e) {
  return ExtensionMorphism{Matrix::identity(e.g().field(), e.n_dim()),
                           AwbMorphism::identity(e.g()), AwbMorphism::identity(e.q())};
}

ExtensionMorphism compose_extension_morphisms(const ExtensionMorphism& m2,
                                              const ExtensionMorphism& m1) {
  return ExtensionMorphism{m2.alpha * m1.alpha, m2.beta.compose(m1.beta),
                           m2.gamma.compose(m1.gamma)};
}

bool is_stem(const CentralExtension& e) {
  Subspace d = derived(e.g());
  for (std::size_t r = 0; r < e.n().dim(); ++r)
    if (!d.contains(e.n().basis().row(r))) return false;
  return true;
}

bool is_stem_cover(const CentralExtension& e) {
  Matrix t = theta(e);
  return t.rows() == t.cols() && rank(t) == t.rows();
}

namespace {

// complement of chi(N) /\ [[G,G]] inside chi(N), spanned by RREF basis rows
Subspace stem_excess(const CentralExtension& e) {
  Subspace d = derived(e.g());
  Subspace nd = e.n().intersect(d);
  Subspace cur = nd;
  Matrix rows(e.g().field(), 0, e.g().dim());
  for (std::size_t r = 0; r < e.n().dim(); ++r) {
    Matrix row = e.n().basis().row(r);
    if (cur.contains(row)) continue;
    rows = rows.vstack(row);
    cur = cur.sum(Subspace::span(row));
  }
  return Subspace::span(rows);
}

}  // namespace

StemifyResult stemify(const CentralExtension& e) {
  Subspace m = stem_excess(e);
  if (m.dim() == 0) return StemifyResult{e, identity_extension_morphism(e), m};

  Quotient quot = quotient(e.g(), m);
  Matrix n_rows = quot.projection.apply_rows(e.n().basis());
  Subspace n_new = Subspace::span(n_rows);
  Matrix pi_new = e.pi() * quot.section;  // well-defined: m <= ker pi
  CentralExtension stem = CentralExtension::from_parts(quot.algebra, n_new, e.q(), pi_new);

  Matrix alpha(e.g().field(), stem.n_dim(), e.n_dim());
  for (std::size_t a = 0; a < e.n_dim(); ++a) {
    Matrix img = stem.n_coords(quot.projection.apply(e.n().basis().row(a)));
    for (std::size_t r = 0; r < stem.n_dim(); ++r) alpha.at(r, a) = img.at(0, r);
  }
  ExtensionMorphism proj{std::move(alpha), quot.projection, AwbMorphism::identity(e.q())};
  return StemifyResult{std::move(stem), std::move(proj), std::move(m)};
}

SplitOffResult split_off_abelian(const CentralExtension& e) {
  const Field& f = e.g().field();
  Subspace m = stem_excess(e);
  Subspace d = derived(e.g());

  // complement T of M containing [[G,G]] (and N /\ [[G,G]], which lies in it)
  Matrix t_rows = d.basis();
  Subspace cur = m.sum(d);
  for (std::size_t i = 0; i < e.g().dim(); ++i) {
    Matrix row = Matrix(f, 1, e.g().dim());
    row.at(0, i) = Scalar::one(f);
    if (cur.contains(row)) continue;
    t_rows = t_rows.vstack(row);
    cur = cur.sum(Subspace::span(row));
  }
  Subspace t = Subspace::span(t_rows);

  SubalgebraResult hsub = subalgebra(e.g(), t);
  Subspace n_in_t = e.n().intersect(t);
  Subspace n_h = Subspace::span(t.coords_rows(n_in_t.basis()));
  Matrix pi_t = e.pi() * hsub.inclusion.mat;
  CentralExtension stem_part =
      CentralExtension::from_parts(hsub.algebra, n_h, e.q(), pi_t);

  SubalgebraResult msub = subalgebra(e.g(), m);
  Awb abelian_part = msub.algebra.renamed(e.g().name() + "_ab");
  if (!abelian_part.is_abelian())
    throw std::logic_error("central complement must be abelian");

  Awb prod = direct_product(hsub.algebra, abelian_part);
  Matrix iso_mat = t.basis().transpose().hstack(m.basis().transpose());
  AwbMorphism iso(prod, e.g(), iso_mat);
  return SplitOffResult{std::move(stem_part), std::move(abelian_part), std::move(iso)};
}

DirectSumResult direct_sum_abelian(const CentralExtension& e, const Awb& abelian) {
  if (!abelian.is_abelian()) throw NotAbelianError("direct summand must be abelian");
  const Field& f = e.g().field();
  Awb ghat = direct_product(e.g(), abelian);
  std::size_t ng = e.g().dim(), na = abelian.dim();

  Matrix n_rows(f, e.n_dim() + na, ng + na);
  for (std::size_t r = 0; r < e.n_dim(); ++r)
    for (std::size_t j = 0; j < ng; ++j) n_rows.at(r, j) = e.n().basis().at(r, j);
  for (std::size_t r = 0; r < na; ++r) n_rows.at(e.n_dim() + r, ng + r) = Scalar::one(f);
  Subspace nhat = Subspace::span(n_rows);

  Matrix pihat(f, e.q().dim(), ng + na);
  for (std::size_t r = 0; r < e.q().dim(); ++r)
    for (std::size_t j = 0; j < ng; ++j) pihat.at(r, j) = e.pi().at(r, j);
  CentralExtension ext = CentralExtension::from_parts(ghat, nhat, e.q(), pihat);

  Matrix beta_mat(f, ng, ng + na);
  for (std::size_t i = 0; i < ng; ++i) beta_mat.at(i, i) = Scalar::one(f);
  AwbMorphism beta(ghat, e.g(), beta_mat);

  Matrix alpha(f, e.n_dim(), ext.n_dim());
  for (std::size_t a = 0; a < ext.n_dim(); ++a) {
    Matrix g_part = ext.n().basis().row(a).sub_cols(0, ng);
    // the G-part of a kernel vector of the sum lies in chi(N)
    Matrix coords = e.n().coords(g_part);
    for (std::size_t r = 0; r < e.n_dim(); ++r) alpha.at(r, a) = coords.at(0, r);
  }
  ExtensionMorphism proj{std::move(alpha), std::move(beta), AwbMorphism::identity(e.q())};
  return DirectSumResult{std::move(ext), std::move(proj)};
}

PullbackResult pullback(const CentralExtension& e, const AwbMorphism& eta) {
  if (!eta.target.same_structure(e.q()))
    throw std::invalid_argument("eta must land in the quotient of the extension");
  MorphismReport rep = check_morphism(eta);
  if (!rep.isomorphism()) throw NotIsoError("pullback requires an algebra isomorphism");

  const Field& f = e.g().field();
  const Awb& q1 = eta.source;
  std::size_t ng = e.g().dim(), nq1 = q1.dim();
  Awb ambient = direct_product(e.g(), q1);

  Matrix psi(f, e.q().dim(), ng + nq1);  // (g,q) -> pi(g) - eta(q)
  for (std::size_t r = 0; r < e.q().dim(); ++r) {
    for (std::size_t j = 0; j < ng; ++j) psi.at(r, j) = e.pi().at(r, j);
    for (std::size_t j = 0; j < nq1; ++j) psi.at(r, ng + j) = -eta.mat.at(r, j);
  }
  Subspace s = Subspace::span(kernel(psi));
  SubalgebraResult sub = subalgebra(ambient, s);

  Matrix n_rows(f, e.n_dim(), s.dim());
  for (std::size_t r = 0; r < e.n_dim(); ++r) {
    Matrix w(f, 1, ng + nq1);
    for (std::size_t j = 0; j < ng; ++j) w.at(0, j) = e.n().basis().at(r, j);
    n_rows.set_row(r, s.coords(w));
  }
  Matrix pihat(f, nq1, ng + nq1);
  for (std::size_t r = 0; r < nq1; ++r) pihat.at(r, ng + r) = Scalar::one(f);
  CentralExtension ext = CentralExtension::from_parts(
      sub.algebra, Subspace::span(n_rows), q1, pihat * sub.inclusion.mat);

  // comparison isomorphism from the original: g -> (g, eta^{-1} pi(g))
  Matrix eta_inv = *inverse(eta.mat);
  Matrix beta_mat(f, ext.g().dim(), ng);
  for (std::size_t i = 0; i < ng; ++i) {
    Matrix w(f, 1, ng + nq1);
    w.at(0, i) = Scalar::one(f);
    Matrix qpart = (eta_inv * e.pi().col(i)).transpose();
    for (std::size_t j = 0; j < nq1; ++j) w.at(0, ng + j) = qpart.at(0, j);
    Matrix coords = s.coords(w);
    for (std::size_t r = 0; r < ext.g().dim(); ++r) beta_mat.at(r, i) = coords.at(0, r);
  }
  AwbMorphism beta(e.g(), ext.g(), beta_mat);
  Matrix alpha(f, ext.n_dim(), e.n_dim());
  for (std::size_t a = 0; a < e.n_dim(); ++a) {
    Matrix img = ext.n_coords(beta.apply(e.n().basis().row(a)));
    for (std::size_t r = 0; r < ext.n_dim(); ++r) alpha.at(r, a) = img.at(0, r);
  }
  AwbMorphism gamma(e.q(), q1, eta_inv);
  ExtensionMorphism from_original{std::move(alpha), std::move(beta), std::move(gamma)};
  return PullbackResult{std::move(ext), std::move(from_original)};
}

AncestorResult common_ancestor(const CentralExtension& e1, const CentralExtension& e2,
                               const AwbMorphism& eta) {
  if (!eta.source.same_structure(e1.q()) || !eta.target.same_structure(e2.q()))
    throw std::invalid_argument("eta must map the first quotient onto the second");
  MorphismReport rep = check_morphism(eta);
  if (!rep.isomorphism()) throw NotIsoError("common ancestor requires an algebra isomorphism");

  const Field& f = e1.g().field();
  std::size_t n1 = e1.g().dim(), n2 = e2.g().dim();
  Awb ambient = direct_product(e1.g(), e2.g());

  Matrix psi(f, e2.q().dim(), n1 + n2);  // (g1,g2) -> eta(pi1 g1) - pi2 g2
  Matrix eta_pi1 = eta.mat * e1.pi();
  for (std::size_t r = 0; r < e2.q().dim(); ++r) {
    for (std::size_t j = 0; j < n1; ++j) psi.at(r, j) = eta_pi1.at(r, j);
    for (std::size_t j = 0; j < n2; ++j) psi.at(r, n1 + j) = -e2.pi().at(r, j);
  }
  Subspace s = Subspace::span(kernel(psi));
  SubalgebraResult sub = subalgebra(ambient, s);

  Matrix n_rows(f, e1.n_dim() + e2.n_dim(), s.dim());
  for (std::size_t r = 0; r < e1.n_dim(); ++r) {
    Matrix w(f, 1, n1 + n2);
    for (std::size_t j = 0; j < n1; ++j) w.at(0, j) = e1.n().basis().at(r, j);
    n_rows.set_row(r, s.coords(w));
  }
  for (std::size_t r = 0; r < e2.n_dim(); ++r) {
    Matrix w(f, 1, n1 + n2);
    for (std::size_t j = 0; j < n2; ++j) w.at(0, n1 + j) = e2.n().basis().at(r, j);
    n_rows.set_row(e1.n_dim() + r, s.coords(w));
  }
  Matrix rho(f, e1.q().dim(), n1 + n2);
  for (std::size_t r = 0; r < e1.q().dim(); ++r)
    for (std::size_t j = 0; j < n1; ++j) rho.at(r, j) = e1.pi().at(r, j);
  CentralExtension ancestor = CentralExtension::from_parts(
      sub.algebra, Subspace::span(n_rows), e1.q(), rho * sub.inclusion.mat);

  auto projection = [&](const CentralExtension& target, std::size_t offset,
                        std::size_t dim_target, AwbMorphism gamma) {
    Matrix beta_mat(f, dim_target, ancestor.g().dim());
    for (std::size_t c = 0; c < ancestor.g().dim(); ++c) {
      Matrix amb_row = sub.inclusion.apply(ancestor.g().basis_row(c));
      for (std::size_t r = 0; r < dim_target; ++r) beta_mat.at(r, c) = amb_row.at(0, offset + r);
    }
    AwbMorphism beta(ancestor.g(), target.g(), beta_mat);
    Matrix alpha(f, target.n_dim(), ancestor.n_dim());
    for (std::size_t a = 0; a < ancestor.n_dim(); ++a) {
      Matrix img = beta.apply(ancestor.n().basis().row(a));
      Matrix coords = target.n().coords(img);
      for (std::size_t r = 0; r < target.n_dim(); ++r) alpha.at(r, a) = coords.at(0, r);
    }
    return ExtensionMorphism{std::move(alpha), std::move(beta), std::move(gamma)};
  };

  ExtensionMorphism to_first = projection(e1, 0, n1, AwbMorphism::identity(e1.q()));
  ExtensionMorphism to_second = projection(e2, n1, n2, eta);
  return AncestorResult{std::move(ancestor), std::move(to_first), std::move(to_second)};
}

}  // namespace awb
