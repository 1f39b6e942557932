#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awb/homology.hpp"
#include "test_helpers.hpp"

using namespace awb;
using namespace awb::testing;

namespace {

// theta evaluated with an arbitrary section: test-side oracle for the
// independence of the connecting map from the choice of lift
Matrix theta_with_section(const CentralExtension& e, const HomologySpace& h1q,
                          const Matrix& section) {
  const std::size_t nq = e.q().dim();
  Matrix out(e.g().field(), e.n_dim(), h1q.dim());
  for (std::size_t c = 0; c < h1q.dim(); ++c) {
    Matrix rep = h1q.representatives().row(c);
    Matrix value(e.g().field(), 1, e.g().dim());
    for (std::size_t i = 0; i < nq; ++i)
      for (std::size_t j = 0; j < nq; ++j) {
        Matrix li = (section * e.q().basis_row(i).transpose()).transpose();
        Matrix lj = (section * e.q().basis_row(j).transpose()).transpose();
        const Scalar& ct = rep.at(0, ChainSlice::tensor_pos(nq, i, j));
        if (!ct.is_zero()) value = value + e.g().mul(li, lj).scaled(ct);
        const Scalar& cc = rep.at(0, ChainSlice::circle_pos(nq, i, j));
        if (!cc.is_zero()) value = value + e.g().brk(li, lj).scaled(cc);
      }
    Matrix coords = e.n_coords(value);
    for (std::size_t r = 0; r < e.n_dim(); ++r) out.at(r, c) = coords.at(0, r);
  }
  return out;
}

}  // namespace

TEST_CASE("chain slice entries") {
  Field q = Field::rationals();

  auto ab = chain_slice(catalog::get("ab(3)", q));
  CHECK(ab.d0.is_zero());
  CHECK(ab.d1.is_zero());

  // idem1: d0(e@e) = e, d0(eoe) = 0, d1(e@e@e) = 0, d1(eoeoe) = -eoe
  auto id1 = chain_slice(catalog::get("idem1", q));
  CHECK(id1.d0.at(0, 0) == Scalar::one(q));
  CHECK(id1.d0.at(0, 1).is_zero());
  CHECK(id1.d1.col(0).is_zero());
  CHECK(id1.d1.at(1, 1) == -Scalar::one(q));
  CHECK(id1.d1.at(0, 1).is_zero());

  // heis: all tensor-block columns vanish, d0(x o y) = z
  auto h = chain_slice(catalog::get("heis", q));
  CHECK(h.d0.sub_cols(0, 9).is_zero());
  Matrix zcol = h.d0.col(ChainSlice::circle_pos(3, 0, 1));
  CHECK(zcol.at(2, 0) == Scalar::one(q));
}

TEST_CASE("d0 after d1 vanishes") {
  std::mt19937_64 rng(31);
  for (const Field& f : all_fields()) {
    for (const std::string& name : catalog::list()) {
      auto cs = chain_slice(catalog::get(name, f));
      CHECK((cs.d0 * cs.d1).is_zero());
    }
    for (int rep = 0; rep < 8; ++rep) {
      auto cs = chain_slice(catalog::random_awb(f, 1 + rng() % 5, rng()));
      CHECK((cs.d0 * cs.d1).is_zero());
    }
  }
}

TEST_CASE("h0 is the derived-algebra quotient") {
  Field q = Field::rationals();
  CHECK(h0(catalog::get("ab(2)", q)).dim() == 2);
  CHECK(h0(catalog::get("idem1", q)).dim() == 0);
  CHECK(h0(catalog::get("heis", q)).dim() == 2);
  std::mt19937_64 rng(37);
  for (const Field& f : all_fields())
    for (int rep = 0; rep < 8; ++rep) {
      Awb a = catalog::random_awb(f, 1 + rng() % 5, rng());
      CHECK(h0(a).dim() == a.dim() - derived(a).dim());
    }
}

TEST_CASE("h1 dimensions") {
  Field q = Field::rationals();
  for (std::size_t n = 1; n <= 4; ++n) {
    Awb ab = catalog::get("ab(" + std::to_string(n) + ")", q);
    CHECK(h1(ab).dim() == 2 * n * n);
  }

  // idem1 oracle: C1 has dim 2, rank d0 = 1 (only e@e maps onto e) and
  // rank d1 = 1 (only eoeoe maps onto -eoe), so dim H1 = (2-1) - 1 = 0
  auto cs = chain_slice(catalog::get("idem1", q));
  CHECK(rank(cs.d0) == 1);
  CHECK(rank(cs.d1) == 1);
  CHECK(h1(catalog::get("idem1", q)).dim() == 0);
}

TEST_CASE("homology representatives are canonical cycles") {
  for (const char* name : {"heis", "taut_u2", "idem1", "ab(2)"}) {
    Awb a = catalog::get(name, Field::rationals());
    HomologySpace h = h1(a);
    for (std::size_t r = 0; r < h.dim(); ++r) {
      CHECK(h.cycles().contains(h.representatives().row(r)));
      Matrix coords = h.coords_of(h.representatives().row(r));
      for (std::size_t c = 0; c < h.dim(); ++c)
        CHECK(coords.at(0, c) == (c == r ? Scalar::one(a.field()) : Scalar::zero(a.field())));
    }
  }
}

TEST_CASE("induced map on h1") {
  Field q = Field::rationals();
  Awb h = catalog::get("heis", q);

  HomologySpace hh = h1(h);
  Matrix idm = induced_h1(AwbMorphism::identity(h), hh, hh);
  CHECK(idm == Matrix::identity(q, hh.dim()));

  Awb ab2 = catalog::get("ab(2)", q);
  HomologySpace hab = h1(ab2);
  Matrix zm = induced_h1(AwbMorphism(ab2, ab2, Matrix(q, 2, 2)), hab, hab);
  CHECK(zm.is_zero());

  // projection heis ->> ab(2): at chain level x o y substitutes to x o y,
  // and the class of the image is the class of x o y in H1(ab(2))
  Quotient quot = quotient(h, span_of(h, {2}));
  Matrix cmap = chain_map_c1(quot.projection);
  Matrix chain_src(q, 1, 18);
  chain_src.at(0, ChainSlice::circle_pos(3, 0, 1)) = Scalar::one(q);
  Matrix chain_dst(q, 1, 8);
  chain_dst.at(0, ChainSlice::circle_pos(2, 0, 1)) = Scalar::one(q);
  CHECK((cmap * chain_src.transpose()).transpose() == chain_dst);

  // on an honest cycle of heis: y o x is a cycle since [y,x] = 0
  Matrix proj_h1 = induced_h1(quot.projection, hh, hab);
  Matrix cycle_src(q, 1, 18);
  cycle_src.at(0, ChainSlice::circle_pos(3, 1, 0)) = Scalar::one(q);
  Matrix mapped = (proj_h1 * hh.coords_of(cycle_src).transpose()).transpose();
  Matrix cycle_dst(q, 1, 8);
  cycle_dst.at(0, ChainSlice::circle_pos(2, 1, 0)) = Scalar::one(q);
  CHECK(mapped == hab.coords_of(cycle_dst));

  // functoriality: include heis into heis x ab(1), then project back
  Awb hx = catalog::get("heis_x_ab1", q);
  Matrix incl(q, 4, 3);
  for (std::size_t i = 0; i < 3; ++i) incl.at(i, i) = Scalar::one(q);
  Matrix proj(q, 3, 4);
  for (std::size_t i = 0; i < 3; ++i) proj.at(i, i) = Scalar::one(q);
  AwbMorphism inc_m(h, hx, incl), proj_m(hx, h, proj);
  HomologySpace hhx = h1(hx);
  Matrix a = induced_h1(proj_m, hhx, hh) * induced_h1(inc_m, hh, hhx);
  Matrix b = induced_h1(proj_m.compose(inc_m), hh, hh);
  CHECK(a == b);
  CHECK(b == Matrix::identity(q, hh.dim()));

  CHECK_THROWS_AS(induced_h1(AwbMorphism(h, catalog::get("ab(3)", q), Matrix::identity(q, 3))),
                  NotAlgebraMapError);
}

TEST_CASE("theta on the named extensions") {
  Field q = Field::rationals();

  auto e = catalog::get_extension("e_heis", q);
  HomologySpace h1q = h1(e.q());
  Matrix t = theta(e, h1q);
  CHECK(rank(t) == 1);
  Matrix xy(q, 1, 8);
  xy.at(0, ChainSlice::circle_pos(2, 0, 1)) = Scalar::one(q);
  CHECK((t * h1q.coords_of(xy).transpose()).transpose() == row_of(q, {1}));  // z
  Matrix xty(q, 1, 8);
  xty.at(0, ChainSlice::tensor_pos(2, 0, 1)) = Scalar::one(q);
  CHECK((t * h1q.coords_of(xty).transpose()).is_zero());

  // split extension 0 -> ab(1) -> ab(2) -> ab(1) -> 0
  Awb ab2 = catalog::get("ab(2)", q);
  auto split = CentralExtension::make(ab2, span_of(ab2, {1}));
  CHECK(theta(split).is_zero());

  // trivial extension: theta into the zero space
  auto triv = catalog::get_extension("triv_heis", q);
  CHECK(theta(triv).rows() == 0);
}

TEST_CASE("theta image law on the catalog") {
  for (const Field& f : all_fields())
    for (const std::string& name : catalog::extension_list()) {
      CentralExtension e = catalog::get_extension(name, f);
      Matrix t = theta(e);
      Matrix image_rows = (e.chi() * t).transpose();  // image vectors in G coordinates
      CHECK(Subspace::span(image_rows) == e.n().intersect(derived(e.g())));
    }
}

TEST_CASE("theta does not depend on the section or the representative") {
  Field q = Field::rationals();
  Awb hx = catalog::get("heis_x_ab1", q);
  // kernel span{w}: quotient is heis, whose C1 has nonzero boundaries
  auto e = CentralExtension::make(hx, span_of(hx, {3}));
  HomologySpace h1q = h1(e.q());
  Matrix t = theta(e, h1q);

  // section change: add an arbitrary kernel offset to every lift
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 5; ++rep) {
    Matrix l = random_matrix(q, e.n_dim(), e.q().dim(), rng);
    Matrix section2 = e.section() + e.chi() * l;
    CHECK(e.project((section2 * e.q().basis_row(0).transpose()).transpose()) ==
          e.q().basis_row(0));
    CHECK(theta_with_section(e, h1q, section2) == t);
  }

  // representative change: shift a cycle by boundaries
  CHECK(h1q.boundaries().dim() > 0);
  for (std::size_t r = 0; r < h1q.dim(); ++r) {
    Matrix rep = h1q.representatives().row(r);
    for (std::size_t b = 0; b < h1q.boundaries().dim(); ++b) {
      Matrix shifted = rep + h1q.boundaries().basis().row(b);
      CHECK(e.n_coords(theta_chain_value(e, shifted)) ==
            e.n_coords(theta_chain_value(e, rep)));
    }
  }
}

TEST_CASE("theta is natural") {
  // direct-sum projection (ext -> e) has gamma = id: alpha . theta(ext) = theta(e)
  for (const Field& f : all_fields()) {
    auto e = catalog::get_extension("e_heis", f);
    auto sum = direct_sum_abelian(e, catalog::get("ab(1)", f));
    HomologySpace h1q = h1(e.q());
    Matrix lhs = sum.projection.alpha * theta(sum.ext, h1(sum.ext.q()));
    Matrix h1_gamma = induced_h1(sum.projection.gamma, h1(sum.ext.q()), h1q);
    Matrix rhs = theta(e, h1q) * h1_gamma;
    CHECK(lhs == rhs);
  }

  // pullback comparison morphism (e -> pb) with gamma = eta^{-1}
  Field f2 = Field::prime(2);
  auto e = catalog::get_extension("e_heis", f2);
  Matrix swap(f2, 2, 2);
  swap.at(0, 1) = Scalar::one(f2);
  swap.at(1, 0) = Scalar::one(f2);
  auto pb = pullback(e, AwbMorphism(e.q(), e.q(), swap));
  HomologySpace h1_src = h1(e.q()), h1_dst = h1(pb.ext.q());
  Matrix lhs = pb.from_original.alpha * theta(e, h1_src);
  Matrix rhs = theta(pb.ext, h1_dst) * induced_h1(pb.from_original.gamma, h1_src, h1_dst);
  CHECK(lhs == rhs);
}

TEST_CASE("computable tail of the five-term sequence is exact") {
  // pi restricts to a surjection [[G,G]] ->> [[Q,Q]] whose kernel is im(theta)
  for (const Field& f : all_fields())
    for (const std::string& name : catalog::extension_list()) {
      CentralExtension e = catalog::get_extension(name, f);
      Subspace dg = derived(e.g()), dq = derived(e.q());
      Matrix image_rows(f, dg.dim(), e.q().dim());
      for (std::size_t r = 0; r < dg.dim(); ++r)
        image_rows.set_row(r, e.project(dg.basis().row(r)));
      CHECK(Subspace::span(image_rows) == dq);
      Matrix t = theta(e);
      Subspace theta_image = Subspace::span((e.chi() * t).transpose());
      CHECK(theta_image == dg.intersect(e.n()));
    }
}

TEST_CASE("theta_q") {
  Field q = Field::rationals();
  CHECK(theta_q(catalog::get("ab(3)", q)).map_to_q.is_zero());

  ThetaQ th = theta_q(catalog::get("heis", q));
  Awb h = catalog::get("heis", q);
  CHECK(Subspace::span(th.map_to_q.transpose()) == span_of(h, {2}));
  CHECK(rank(th.map_to_q) == 1);

  CHECK(rank(theta_q(catalog::get("taut_u2", q)).map_to_q) == 0);

  // exactness: image equals [[Q,Q]] /\ Z(Q)
  for (const Field& f : all_fields())
    for (const std::string& name : catalog::list()) {
      Awb a = catalog::get(name, f);
      ThetaQ t = theta_q(a);
      CHECK(Subspace::span(t.map_to_q.transpose()) == derived(a).intersect(center(a)));
    }
}
