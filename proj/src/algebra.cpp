#include "awb/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace awb {

Tensor zero_tensor(const Field& f, std::size_t n) {
  return Tensor(n * n * n, Scalar::zero(f));
}

std::string StructureIssue::str() const {
  std::ostringstream os;
  os << (kind == Kind::Associativity ? "associativity" : "bracket identity") << " fails at basis triple ("
     << i << "," << j << "," << k << ")";
  return os.str();
}

std::string StructureReport::str() const {
  std::ostringstream os;
  for (const auto& v : issues) os << v.str() << "\n";
  return os.str();
}

AwbValidationError::AwbValidationError(StructureReport r)
    : std::runtime_error("invalid structure constants:\n" + r.str()), report(std::move(r)) {}

StructureReport Awb::check(const Field& f, std::size_t n, const Tensor& product,
                           const Tensor& bracket) {
  if (product.size() != n * n * n || bracket.size() != n * n * n)
    throw std::invalid_argument("structure tensor size mismatch");
  StructureReport report;
  auto p = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return product[tensor_index(n, i, j, k)];
  };
  auto b = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return bracket[tensor_index(n, i, j, k)];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bool assoc_ok = true, ident_ok = true;
        for (std::size_t s = 0; s < n; ++s) {
          // (e_i e_j) e_k = e_i (e_j e_k)
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t t = 0; t < n; ++t) {
            lhs += p(i, j, t) * p(t, k, s);
            rhs += p(j, k, t) * p(i, t, s);
          }
          if (!(lhs == rhs)) {
            assoc_ok = false;
            break;
          }
        }
        for (std::size_t s = 0; s < n; ++s) {
          // [e_i e_j, e_k] = [e_i,e_k] e_j + e_i [e_j,e_k]
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t t = 0; t < n; ++t) {
            lhs += p(i, j, t) * b(t, k, s);
            rhs += b(i, k, t) * p(t, j, s);
            rhs += b(j, k, t) * p(i, t, s);
          }
          if (!(lhs == rhs)) {
            ident_ok = false;
            break;
          }
        }
        if (!assoc_ok)
          report.issues.push_back({StructureIssue::Kind::Associativity, i, j, k});
        if (!ident_ok)
          report.issues.push_back({StructureIssue::Kind::BracketIdentity, i, j, k});
      }
  return report;
}

Awb Awb::make(std::string name, const Field& f, std::size_t dim, Tensor product, Tensor bracket) {
  StructureReport r = check(f, dim, product, bracket);
  if (!r.ok()) throw AwbValidationError(std::move(r));
  return Awb(std::move(name), f, dim, std::move(product), std::move(bracket));
}

Awb::Awb(std::string name, const Field& f, std::size_t dim, Tensor product, Tensor bracket)
    : name_(std::move(name)),
      field_(f),
      dim_(dim),
      product_(std::move(product)),
      bracket_(std::move(bracket)) {}

Matrix Awb::basis_row(std::size_t i) const {
  Matrix r(field_, 1, dim_);
  r.at(0, i) = Scalar::one(field_);
  return r;
}

Matrix Awb::bilinear(const Tensor& t, const Matrix& u, const Matrix& v) const {
  if (u.cols() != dim_ || v.cols() != dim_ || u.rows() != 1 || v.rows() != 1)
    throw std::invalid_argument("algebra element must be a 1 x dim row");
  Matrix out(field_, 1, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u.at(0, i).is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v.at(0, j).is_zero()) continue;
      Scalar c = u.at(0, i) * v.at(0, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& s = t[tensor_index(dim_, i, j, k)];
        if (!s.is_zero()) out.at(0, k) += c * s;
      }
    }
  }
  return out;
}

Matrix Awb::mul(const Matrix& u, const Matrix& v) const { return bilinear(product_, u, v); }
Matrix Awb::brk(const Matrix& u, const Matrix& v) const { return bilinear(bracket_, u, v); }

bool Awb::is_abelian() const {
  for (const auto& s : product_)
    if (!s.is_zero()) return false;
  for (const auto& s : bracket_)
    if (!s.is_zero()) return false;
  return true;
}

bool Awb::same_structure(const Awb& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && product_ == o.product_ && bracket_ == o.bracket_;
}

Awb Awb::renamed(std::string name) const {
  Awb out = *this;
  out.name_ = std::move(name);
  return out;
}

AwbMorphism::AwbMorphism(Awb src, Awb tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
  if (mat.rows() != target.dim() || mat.cols() != source.dim())
    throw std::invalid_argument("morphism matrix must be dim(target) x dim(source)");
  if (!(source.field() == target.field()))
    throw FieldMismatchError("morphism between algebras over different fields");
}

AwbMorphism AwbMorphism::identity(const Awb& a) {
  return AwbMorphism(a, a, Matrix::identity(a.field(), a.dim()));
}

Matrix AwbMorphism::apply(const Matrix& row_vec) const {
  return (mat * row_vec.transpose()).transpose();
}

Matrix AwbMorphism::apply_rows(const Matrix& rows) const {
  return (mat * rows.transpose()).transpose();
}

AwbMorphism AwbMorphism::compose(const AwbMorphism& inner) const {
  if (!inner.target.same_structure(source))
    throw std::invalid_argument("morphism composition mismatch");
  return AwbMorphism(inner.source, target, mat * inner.mat);
}

MorphismReport check_morphism(const AwbMorphism& phi) {
  MorphismReport rep;
  const Awb& a = phi.source;
  const Awb& b = phi.target;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix ei = a.basis_row(i), ej = a.basis_row(j);
      Matrix pi = phi.apply(ei), pj = phi.apply(ej);
      if (!(phi.apply(a.mul(ei, ej)) == b.mul(pi, pj)))
        rep.product_failures.push_back({i, j});
      if (!(phi.apply(a.brk(ei, ej)) == b.brk(pi, pj)))
        rep.bracket_failures.push_back({i, j});
    }
  std::size_t r = rank(phi.mat);
  rep.injective = (r == a.dim());
  rep.surjective = (r == b.dim());
  return rep;
}

std::string MorphismReport::str() const {
  std::ostringstream os;
  for (const auto& p : product_failures)
    os << "product not preserved at (" << p[0] << "," << p[1] << ")\n";
  for (const auto& p : bracket_failures)
    os << "bracket not preserved at (" << p[0] << "," << p[1] << ")\n";
  os << (injective ? "injective" : "not injective") << ", "
     << (surjective ? "surjective" : "not surjective") << "\n";
  return os.str();
}

IdealFlags ideal_flags(const Awb& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw std::invalid_argument("subspace ambient mismatch");
  IdealFlags flags;
  flags.subalgebra = flags.left_ideal = flags.right_ideal = true;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Matrix v = s.basis().row(r);
    for (std::size_t q = 0; q < s.dim(); ++q) {
      Matrix w = s.basis().row(q);
      if (!s.contains(a.mul(v, w)) || !s.contains(a.brk(v, w))) flags.subalgebra = false;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Matrix e = a.basis_row(i);
      if (!s.contains(a.mul(v, e)) || !s.contains(a.brk(v, e))) flags.left_ideal = false;
      if (!s.contains(a.mul(e, v)) || !s.contains(a.brk(e, v))) flags.right_ideal = false;
    }
  }
  return flags;
}

Subspace commutator_ideal(const Awb& a, const Subspace& i, const Subspace& j) {
  if (!ideal_flags(a, i).two_sided() || !ideal_flags(a, j).two_sided())
    throw NotAnIdealError("commutator ideal requires two-sided ideals");
  Matrix gens(a.field(), 0, a.dim());
  for (std::size_t r = 0; r < i.dim(); ++r)
    for (std::size_t q = 0; q < j.dim(); ++q) {
      Matrix u = i.basis().row(r), v = j.basis().row(q);
      gens = gens.vstack(a.mul(u, v));
      gens = gens.vstack(a.mul(v, u));
      gens = gens.vstack(a.brk(u, v));
      gens = gens.vstack(a.brk(v, u));
    }
  Subspace s = Subspace::span(gens);
  // close under multiplication/bracket by I and J on both sides
  for (;;) {
    Matrix extra(a.field(), 0, a.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Matrix x = s.basis().row(r);
      for (const Subspace* side : {&i, &j}) {
        for (std::size_t q = 0; q < side->dim(); ++q) {
          Matrix w = side->basis().row(q);
          extra = extra.vstack(a.mul(w, x));
          extra = extra.vstack(a.mul(x, w));
          extra = extra.vstack(a.brk(w, x));
          extra = extra.vstack(a.brk(x, w));
        }
      }
    }
    Subspace next = s.sum(Subspace::span(extra));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

Subspace derived(const Awb& a) {
  Subspace full = Subspace::full(a.field(), a.dim());
  return commutator_ideal(a, full, full);
}

Subspace center(const Awb& a) {
  std::size_t n = a.dim();
  // rows of the constraint matrix: (a e_j)_k, (e_j a)_k, [a,e_j]_k, [e_j,a]_k
  Matrix m(a.field(), 4 * n * n, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        m.at(row, i) = a.product_c(i, j, k);
        m.at(row + 1, i) = a.product_c(j, i, k);
        m.at(row + 2, i) = a.bracket_c(i, j, k);
        m.at(row + 3, i) = a.bracket_c(j, i, k);
      }
      row += 4;
    }
  return Subspace::span(kernel(m));
}

Quotient quotient(const Awb& a, const Subspace& ideal) {
  if (!ideal_flags(a, ideal).two_sided())
    throw NotAnIdealError("quotient requires a two-sided ideal");
  auto co = ideal.copivots();
  std::size_t m = co.size();
  Tensor prod = zero_tensor(a.field(), m), brk = zero_tensor(a.field(), m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Matrix pw = ideal.quotient_coords(a.mul(a.basis_row(co[x]), a.basis_row(co[y])));
      Matrix bw = ideal.quotient_coords(a.brk(a.basis_row(co[x]), a.basis_row(co[y])));
      for (std::size_t k = 0; k < m; ++k) {
        prod[tensor_index(m, x, y, k)] = pw.at(0, k);
        brk[tensor_index(m, x, y, k)] = bw.at(0, k);
      }
    }
  Awb q = Awb::make(a.name() + "/I", a.field(), m, std::move(prod), std::move(brk));
  Matrix proj(a.field(), m, a.dim());
  for (std::size_t jcol = 0; jcol < a.dim(); ++jcol) {
    Matrix qc = ideal.quotient_coords(a.basis_row(jcol));
    for (std::size_t r = 0; r < m; ++r) proj.at(r, jcol) = qc.at(0, r);
  }
  Matrix section(a.field(), a.dim(), m);
  for (std::size_t r = 0; r < m; ++r) section.at(co[r], r) = Scalar::one(a.field());
  return Quotient{q, AwbMorphism(a, q, proj), section};
}

Awb direct_product(const Awb& a, const Awb& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatchError("direct product over different fields");
  std::size_t n = a.dim() + b.dim();
  Tensor prod = zero_tensor(a.field(), n), brk = zero_tensor(a.field(), n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        prod[tensor_index(n, i, j, k)] = a.product_c(i, j, k);
        brk[tensor_index(n, i, j, k)] = a.bracket_c(i, j, k);
      }
  std::size_t off = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) {
        prod[tensor_index(n, off + i, off + j, off + k)] = b.product_c(i, j, k);
        brk[tensor_index(n, off + i, off + j, off + k)] = b.bracket_c(i, j, k);
      }
  return Awb::make(a.name() + "x" + b.name(), a.field(), n, std::move(prod), std::move(brk));
}

Awb d_bracket(std::string name, const Field& f, std::size_t dim, const Tensor& product,
              const Matrix& d) {
  if (d.rows() != dim || d.cols() != dim) throw std::invalid_argument("D matrix shape mismatch");
  Awb plain = Awb::make(name + "_assoc", f, dim, product, zero_tensor(f, dim));
  Tensor brk = zero_tensor(f, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Matrix dj = d.col(j).transpose();  // D(e_j) as a row
    for (std::size_t i = 0; i < dim; ++i) {
      Matrix ei = plain.basis_row(i);
      Matrix val = plain.mul(ei, dj) - plain.mul(dj, ei);
      for (std::size_t k = 0; k < dim; ++k) brk[tensor_index(dim, i, j, k)] = val.at(0, k);
    }
  }
  return Awb::make(std::move(name), f, dim, product, std::move(brk));
}

Awb tautological(std::string name, const Field& f, std::size_t dim, const Tensor& product) {
  return d_bracket(std::move(name), f, dim, product, Matrix::identity(f, dim));
}

SubalgebraResult subalgebra(const Awb& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw std::invalid_argument("subspace ambient mismatch");
  std::size_t m = s.dim();
  Tensor prod = zero_tensor(a.field(), m), brk = zero_tensor(a.field(), m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Matrix u = s.basis().row(x), v = s.basis().row(y);
      Matrix pw = a.mul(u, v), bw = a.brk(u, v);
      if (!s.contains(pw) || !s.contains(bw))
        throw NotASubalgebraError("subspace is not closed under the operations (basis pair " +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
      Matrix pc = s.coords(pw), bc = s.coords(bw);
      for (std::size_t k = 0; k < m; ++k) {
        prod[tensor_index(m, x, y, k)] = pc.at(0, k);
        brk[tensor_index(m, x, y, k)] = bc.at(0, k);
      }
    }
  Awb sub = Awb::make(a.name() + "_sub", a.field(), m, std::move(prod), std::move(brk));
  Matrix incl = s.basis().transpose();  // ambient.dim x m
  return SubalgebraResult{sub, AwbMorphism(sub, a, incl)};
}

}  // namespace awb
