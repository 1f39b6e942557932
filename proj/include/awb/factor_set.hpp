#pragma once

#include "awb/extension.hpp"

namespace awb {

/// Factor set (f, g) of a central extension of Q by an m-dimensional central
/// kernel: f encodes products of lifts, g encodes brackets. Valid factor sets
/// satisfy, on all basis triples,
///   f(ab, c) = f(a, bc)                       (associativity cocycle)
///   g(ab)(c) = f([a,c], b) + f(a, [b,c])      (bracket compatibility)
struct FactorSet {
  Awb q;
  std::size_t m;             // kernel dimension
  std::vector<Matrix> f, g;  // q.dim()^2 entries, each 1 x m, index i*dim+j

  const Matrix& f_at(std::size_t i, std::size_t j) const { return f[i * q.dim() + j]; }
  const Matrix& g_at(std::size_t i, std::size_t j) const { return g[i * q.dim() + j]; }
  Matrix& f_at(std::size_t i, std::size_t j) { return f[i * q.dim() + j]; }
  Matrix& g_at(std::size_t i, std::size_t j) { return g[i * q.dim() + j]; }

  static FactorSet zero(const Awb& q, std::size_t m);
};

struct FactorSetIssue {
  enum class Kind { Cocycle, BracketCompat };
  Kind kind;
  std::size_t i, j, k;
  std::string str() const;
};

struct FactorSetReport {
  std::vector<FactorSetIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

struct FactorSetError : std::runtime_error {
  FactorSetReport report;
  explicit FactorSetError(FactorSetReport r);
};

FactorSetReport check_factor_set(const FactorSet& fs);

/// Structure tensors of the algebra on N + Q defined by the factor set
/// (kernel block first). No validity checks: invalid factor sets give
/// tensors that fail Awb::check in exactly the corresponding triples.
std::pair<Tensor, Tensor> factor_set_tensors(const FactorSet& fs);

/// Central extension 0 -> N -> N + Q -> Q -> 0 built from a valid factor
/// set; throws FactorSetError before construction when a check fails.
CentralExtension build_from_factor_set(const FactorSet& fs);

/// Factor set of a central extension along its canonical section:
/// f(a,b) = s(a)s(b) - s(ab), g(a)(b) = [s(a),s(b)] - s([a,b]), in
/// N-coordinates.
FactorSet extract_factor_set(const CentralExtension& e);

}  // namespace awb
