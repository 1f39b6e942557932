#include "awb/homology.hpp"

#include <stdexcept>

namespace awb {

ChainSlice chain_slice(const Awb& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Matrix d0(f, n, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d0.at(k, ChainSlice::tensor_pos(n, i, j)) = a.product_c(i, j, k);
        d0.at(k, ChainSlice::circle_pos(n, i, j)) = a.bracket_c(i, j, k);
      }

  Matrix d1(f, 2 * n * n, 2 * n * n * n);
  const std::size_t circle3 = n * n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t col_t = (i * n + j) * n + k;
        std::size_t col_c = circle3 + col_t;
        for (std::size_t t = 0; t < n; ++t) {
          // (ei ej)@ek - ei@(ej ek)
          d1.at(ChainSlice::tensor_pos(n, t, k), col_t) += a.product_c(i, j, t);
          d1.at(ChainSlice::tensor_pos(n, i, t), col_t) -= a.product_c(j, k, t);
          // [ei,ek]@ej + ei@[ej,ek] - (ei ej)oek
          d1.at(ChainSlice::tensor_pos(n, t, j), col_c) += a.bracket_c(i, k, t);
          d1.at(ChainSlice::tensor_pos(n, i, t), col_c) += a.bracket_c(j, k, t);
          d1.at(ChainSlice::circle_pos(n, t, k), col_c) -= a.product_c(i, j, t);
        }
      }
  return ChainSlice{a, std::move(d0), std::move(d1)};
}

namespace {

// greedy complement of `inner` inside `outer`, spanned by RREF basis rows of
// outer that stay independent of inner
Matrix greedy_complement(const Subspace& outer, const Subspace& inner) {
  Matrix reps(outer.field(), 0, outer.ambient());
  Subspace current = inner;
  for (std::size_t r = 0; r < outer.dim(); ++r) {
    Matrix row = outer.basis().row(r);
    if (current.contains(row)) continue;
    reps = reps.vstack(row);
    current = current.sum(Subspace::span(row));
  }
  return reps;
}

}  // namespace

HomologySpace::HomologySpace(int degree, Subspace cycles, Subspace boundaries)
    : degree_(degree),
      cycles_(std::move(cycles)),
      boundaries_(std::move(boundaries)),
      representatives_(greedy_complement(cycles_, boundaries_)) {
  if (!cycles_.contains(boundaries_))
    throw std::invalid_argument("boundary space must lie inside the cycle space");
}

Matrix HomologySpace::coords_of(const Matrix& cycle_rows) const {
  for (std::size_t r = 0; r < cycle_rows.rows(); ++r)
    if (!cycles_.contains(cycle_rows.row(r)))
      throw std::invalid_argument("chain is not a cycle");
  Matrix span_rows = representatives_.vstack(boundaries_.basis());
  auto sol = solve(span_rows.transpose(), cycle_rows.transpose());
  if (!sol) throw std::logic_error("cycle outside representative + boundary span");
  return sol->sub_rows(0, dim()).transpose();
}

Matrix HomologySpace::chain_of(const Matrix& class_row) const {
  return class_row * representatives_;
}

HomologySpace h0(const Awb& a) {
  ChainSlice cs = chain_slice(a);
  Subspace cycles = Subspace::full(a.field(), a.dim());
  Subspace boundaries = Subspace::span(cs.d0.transpose());
  return HomologySpace(0, std::move(cycles), std::move(boundaries));
}

HomologySpace h1(const Awb& a) {
  ChainSlice cs = chain_slice(a);
  Subspace cycles = Subspace::span(kernel(cs.d0));
  Subspace boundaries = Subspace::span(cs.d1.transpose());
  return HomologySpace(1, std::move(cycles), std::move(boundaries));
}

Matrix chain_map_c1(const AwbMorphism& phi) {
  const std::size_t n = phi.source.dim(), m = phi.target.dim();
  Matrix out(phi.mat.field(), 2 * m * m, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& aki = phi.mat.at(k, i);
        if (aki.is_zero()) continue;
        for (std::size_t l = 0; l < m; ++l) {
          Scalar c = aki * phi.mat.at(l, j);
          if (c.is_zero()) continue;
          out.at(ChainSlice::tensor_pos(m, k, l), ChainSlice::tensor_pos(n, i, j)) = c;
          out.at(ChainSlice::circle_pos(m, k, l), ChainSlice::circle_pos(n, i, j)) = c;
        }
      }
  return out;
}

Matrix induced_h1(const AwbMorphism& phi, const HomologySpace& h1_src,
                  const HomologySpace& h1_dst) {
  MorphismReport rep = check_morphism(phi);
  if (!rep.algebra_map())
    throw NotAlgebraMapError("induced map on homology requires an algebra map:\n" + rep.str());
  Matrix cmap = chain_map_c1(phi);
  Matrix mapped = (cmap * h1_src.representatives().transpose()).transpose();
  return h1_dst.coords_of(mapped).transpose();
}

Matrix induced_h1(const AwbMorphism& phi) {
  return induced_h1(phi, h1(phi.source), h1(phi.target));
}

Matrix theta_chain_value(const CentralExtension& e, const Matrix& c1_row) {
  const std::size_t nq = e.q().dim();
  if (c1_row.rows() != 1 || c1_row.cols() != 2 * nq * nq)
    throw std::invalid_argument("theta expects a C1(Q) chain row");
  Matrix value(e.g().field(), 1, e.g().dim());
  std::vector<Matrix> lifts;
  lifts.reserve(nq);
  for (std::size_t i = 0; i < nq; ++i) lifts.push_back(e.lift(e.q().basis_row(i)));
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      const Scalar& ct = c1_row.at(0, ChainSlice::tensor_pos(nq, i, j));
      if (!ct.is_zero()) value = value + e.g().mul(lifts[i], lifts[j]).scaled(ct);
      const Scalar& cc = c1_row.at(0, ChainSlice::circle_pos(nq, i, j));
      if (!cc.is_zero()) value = value + e.g().brk(lifts[i], lifts[j]).scaled(cc);
    }
  return value;
}

Matrix theta(const CentralExtension& e, const HomologySpace& h1_q) {
  Matrix out(e.g().field(), e.n_dim(), h1_q.dim());
  for (std::size_t c = 0; c < h1_q.dim(); ++c) {
    Matrix value = theta_chain_value(e, h1_q.representatives().row(c));
    Matrix coords = e.n_coords(value);
    for (std::size_t r = 0; r < e.n_dim(); ++r) out.at(r, c) = coords.at(0, r);
  }
  return out;
}

Matrix theta(const CentralExtension& e) { return theta(e, h1(e.q())); }

ThetaQ theta_q(const Awb& q) {
  CentralExtension e = CentralExtension::make(q, center(q));
  HomologySpace h1_qz = h1(e.q());
  Matrix t = theta(e, h1_qz);
  Matrix to_q = e.chi() * t;
  return ThetaQ{std::move(e), std::move(h1_qz), std::move(to_q)};
}

}  // namespace awb
