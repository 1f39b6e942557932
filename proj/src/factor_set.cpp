#include "awb/factor_set.hpp"

#include <sstream>

namespace awb {

FactorSet FactorSet::zero(const Awb& q, std::size_t m) {
  std::size_t n = q.dim();
  std::vector<Matrix> f(n * n, Matrix(q.field(), 1, m));
  return FactorSet{q, m, f, f};
}

std::string FactorSetIssue::str() const {
  std::ostringstream os;
  os << (kind == Kind::Cocycle ? "cocycle condition" : "bracket compatibility")
     << " fails at basis triple (" << i << "," << j << "," << k << ")";
  return os.str();
}

std::string FactorSetReport::str() const {
  std::ostringstream os;
  for (const auto& v : issues) os << v.str() << "\n";
  return os.str();
}

FactorSetError::FactorSetError(FactorSetReport r)
    : std::runtime_error("invalid factor set:\n" + r.str()), report(std::move(r)) {}

FactorSetReport check_factor_set(const FactorSet& fs) {
  FactorSetReport report;
  const Awb& q = fs.q;
  const std::size_t n = q.dim();
  const Field& f = q.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // f(ei ej, ek) = f(ei, ej ek)
        Matrix lhs(f, 1, fs.m), rhs(f, 1, fs.m);
        for (std::size_t t = 0; t < n; ++t) {
          if (!q.product_c(i, j, t).is_zero())
            lhs = lhs + fs.f_at(t, k).scaled(q.product_c(i, j, t));
          if (!q.product_c(j, k, t).is_zero())
            rhs = rhs + fs.f_at(i, t).scaled(q.product_c(j, k, t));
        }
        if (!(lhs == rhs))
          report.issues.push_back({FactorSetIssue::Kind::Cocycle, i, j, k});

        // g(ei ej)(ek) = f([ei,ek], ej) + f(ei, [ej,ek])
        Matrix glhs(f, 1, fs.m), grhs(f, 1, fs.m);
        for (std::size_t t = 0; t < n; ++t) {
          if (!q.product_c(i, j, t).is_zero())
            glhs = glhs + fs.g_at(t, k).scaled(q.product_c(i, j, t));
          if (!q.bracket_c(i, k, t).is_zero())
            grhs = grhs + fs.f_at(t, j).scaled(q.bracket_c(i, k, t));
          if (!q.bracket_c(j, k, t).is_zero())
            grhs = grhs + fs.f_at(i, t).scaled(q.bracket_c(j, k, t));
        }
        if (!(glhs == grhs))
          report.issues.push_back({FactorSetIssue::Kind::BracketCompat, i, j, k});
      }
  return report;
}

std::pair<Tensor, Tensor> factor_set_tensors(const FactorSet& fs) {
  const std::size_t m = fs.m, nq = fs.q.dim(), n = m + nq;
  const Field& f = fs.q.field();
  Tensor prod = zero_tensor(f, n), brk = zero_tensor(f, n);
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        prod[tensor_index(n, m + i, m + j, k)] = fs.f_at(i, j).at(0, k);
        brk[tensor_index(n, m + i, m + j, k)] = fs.g_at(i, j).at(0, k);
      }
      for (std::size_t k = 0; k < nq; ++k) {
        prod[tensor_index(n, m + i, m + j, m + k)] = fs.q.product_c(i, j, k);
        brk[tensor_index(n, m + i, m + j, m + k)] = fs.q.bracket_c(i, j, k);
      }
    }
  return {std::move(prod), std::move(brk)};
}

CentralExtension build_from_factor_set(const FactorSet& fs) {
  FactorSetReport report = check_factor_set(fs);
  if (!report.ok()) throw FactorSetError(std::move(report));

  auto [prod, brk] = factor_set_tensors(fs);
  const std::size_t m = fs.m, nq = fs.q.dim(), n = m + nq;
  const Field& f = fs.q.field();
  Awb g = Awb::make("N+" + fs.q.name(), f, n, std::move(prod), std::move(brk));

  Matrix n_rows(f, m, n);
  for (std::size_t r = 0; r < m; ++r) n_rows.at(r, r) = Scalar::one(f);
  Matrix pi(f, nq, n);
  for (std::size_t r = 0; r < nq; ++r) pi.at(r, m + r) = Scalar::one(f);
  return CentralExtension::from_parts(std::move(g), Subspace::span(n_rows), fs.q, std::move(pi));
}

FactorSet extract_factor_set(const CentralExtension& e) {
  const Awb& q = e.q();
  const std::size_t n = q.dim();
  FactorSet fs = FactorSet::zero(q, e.n_dim());
  std::vector<Matrix> lifts;
  for (std::size_t i = 0; i < n; ++i) lifts.push_back(e.lift(q.basis_row(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod_defect =
          e.g().mul(lifts[i], lifts[j]) - e.lift(q.mul(q.basis_row(i), q.basis_row(j)));
      Matrix brk_defect =
          e.g().brk(lifts[i], lifts[j]) - e.lift(q.brk(q.basis_row(i), q.basis_row(j)));
      fs.f_at(i, j) = e.n_coords(prod_defect);
      fs.g_at(i, j) = e.n_coords(brk_defect);
    }
  return fs;
}

}  // namespace awb
