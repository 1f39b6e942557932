#include "awb/catalog.hpp"

#include <random>

#include "awb/factor_set.hpp"

namespace awb {
namespace catalog {

namespace {

Awb abelian(const std::string& name, const Field& f, std::size_t n) {
  return Awb::make(name, f, n, zero_tensor(f, n), zero_tensor(f, n));
}

Awb heis(const Field& f) {
  Tensor brk = zero_tensor(f, 3);
  brk[tensor_index(3, 0, 1, 2)] = Scalar::one(f);
  return Awb::make("heis", f, 3, zero_tensor(f, 3), std::move(brk));
}

Awb idem1(const Field& f) {
  Tensor prod = zero_tensor(f, 1);
  prod[0] = Scalar::one(f);
  return Awb::make("idem1", f, 1, std::move(prod), zero_tensor(f, 1));
}

// upper triangular 2x2 matrices, basis E11, E12, E22
Tensor u2_product(const Field& f) {
  Tensor prod = zero_tensor(f, 3);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    prod[tensor_index(3, i, j, k)] = Scalar::one(f);
  };
  set(0, 0, 0);  // E11 E11 = E11
  set(0, 1, 1);  // E11 E12 = E12
  set(1, 2, 1);  // E12 E22 = E12
  set(2, 2, 2);  // E22 E22 = E22
  return prod;
}

Awb taut_u2(const Field& f) { return tautological("taut_u2", f, 3, u2_product(f)); }

Awb dbr_u2(const Field& f) {
  // D projects onto the E11 coordinate
  Matrix d(f, 3, 3);
  d.at(0, 0) = Scalar::one(f);
  return d_bracket("dbr_u2", f, 3, u2_product(f), d);
}

// stem cover of ab(1): e e = n1-part, [e,e] = n2-part
CentralExtension cover_ab1(const Field& f, bool variant_b) {
  Awb q = abelian("ab(1)", f, 1);
  FactorSet fs = FactorSet::zero(q, 2);
  fs.f_at(0, 0).at(0, 0) = Scalar::one(f);
  if (variant_b) fs.f_at(0, 0).at(0, 1) = Scalar::one(f);
  fs.g_at(0, 0).at(0, 1) = Scalar::one(f);
  return build_from_factor_set(fs);
}

Subspace span_of(const Awb& g, const std::vector<std::size_t>& coords) {
  Matrix rows(g.field(), coords.size(), g.dim());
  for (std::size_t r = 0; r < coords.size(); ++r)
    rows.at(r, coords[r]) = Scalar::one(g.field());
  return Subspace::span(rows);
}

}  // namespace

std::vector<std::string> list() {
  return {"zero",       "ab(1)",      "ab(2)",   "ab(3)",  "ab(4)",
          "idem1",      "heis",       "heis_x_ab1", "heis_x_ab2", "taut_u2",
          "dbr_u2"};
}

Awb get(const std::string& name, const Field& f) {
  if (name == "zero") return abelian("zero", f, 0);
  if (name == "ab(1)") return abelian(name, f, 1);
  if (name == "ab(2)") return abelian(name, f, 2);
  if (name == "ab(3)") return abelian(name, f, 3);
  if (name == "ab(4)") return abelian(name, f, 4);
  if (name == "idem1") return idem1(f);
  if (name == "heis") return heis(f);
  if (name == "heis_x_ab1")
    return direct_product(heis(f), abelian("ab(1)", f, 1)).renamed("heis_x_ab1");
  if (name == "heis_x_ab2")
    return direct_product(heis(f), abelian("ab(2)", f, 2)).renamed("heis_x_ab2");
  if (name == "taut_u2") return taut_u2(f);
  if (name == "dbr_u2") return dbr_u2(f);
  throw UnknownNameError("unknown catalog algebra '" + name + "'");
}

ExpectedDims expected(const std::string& name) {
  if (name == "zero") return {0, 0, 0, 0};
  if (name == "ab(1)") return {1, 0, 1, 2};
  if (name == "ab(2)") return {2, 0, 2, 8};
  if (name == "ab(3)") return {3, 0, 3, 18};
  if (name == "ab(4)") return {4, 0, 4, 32};
  if (name == "idem1") return {0, 1, 0, 0};
  if (name == "heis") return {1, 1, 2, 13};
  if (name == "heis_x_ab1") return {2, 1, 3, -1};
  if (name == "heis_x_ab2") return {3, 1, 4, -1};
  if (name == "taut_u2") return {0, 3, 0, -1};
  if (name == "dbr_u2") return {0, 3, 0, -1};
  throw UnknownNameError("unknown catalog algebra '" + name + "'");
}

std::vector<std::string> extension_list() {
  return {"e_heis",       "e_heis_x_ab1", "e_heis_x_ab2", "triv_heis",
          "triv_taut_u2", "split_ab3",    "cover_ab1_a",  "cover_ab1_b"};
}

CentralExtension get_extension(const std::string& name, const Field& f) {
  if (name == "e_heis") {
    Awb g = get("heis", f);
    return CentralExtension::make(g, span_of(g, {2}));
  }
  if (name == "e_heis_x_ab1") {
    Awb g = get("heis_x_ab1", f);
    return CentralExtension::make(g, center(g));
  }
  if (name == "e_heis_x_ab2") {
    Awb g = get("heis_x_ab2", f);
    return CentralExtension::make(g, center(g));
  }
  if (name == "triv_heis") {
    Awb g = get("heis", f);
    return CentralExtension::make(g, Subspace::zero(f, 3));
  }
  if (name == "triv_taut_u2") {
    Awb g = get("taut_u2", f);
    return CentralExtension::make(g, Subspace::zero(f, 3));
  }
  if (name == "split_ab3") {
    Awb g = get("ab(3)", f);
    return CentralExtension::make(g, span_of(g, {2}));
  }
  if (name == "cover_ab1_a") return cover_ab1(f, false);
  if (name == "cover_ab1_b") return cover_ab1(f, true);
  throw UnknownNameError("unknown catalog extension '" + name + "'");
}

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long long> dist(-2, 2);
    return Scalar::of_int(f, dist(rng));
  }
  std::uniform_int_distribution<long long> dist(0, f.prime() - 1);
  return Scalar::of_int(f, dist(rng));
}

// block-diagonal associative product assembled from small families
Tensor random_assoc_product(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Tensor prod = zero_tensor(f, n);
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t remaining = n - pos;
    std::vector<std::size_t> sizes;
    for (std::size_t s : {std::size_t{1}, std::size_t{2}, std::size_t{3}})
      if (s <= remaining) sizes.push_back(s);
    std::size_t block = sizes[rng() % sizes.size()];
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
      prod[tensor_index(n, pos + i, pos + j, pos + k)] = Scalar::one(f);
    };
    if (block == 1) {
      if (rng() % 2) set(0, 0, 0);  // idempotent line or zero line
    } else if (block == 2) {
      set(0, 0, 1);  // t t = t^2, truncated at t^3
    } else {
      set(0, 0, 0);  // upper triangular 2x2
      set(0, 1, 1);
      set(1, 2, 1);
      set(2, 2, 2);
    }
    pos += block;
  }
  return prod;
}

}  // namespace

Awb random_awb(const Field& f, std::size_t n, std::uint64_t seed) {
  if (n > 6) throw std::invalid_argument("random_awb supports n <= 6");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + n * 1315423911ULL +
                      (f.is_rational() ? 0 : f.prime()));
  std::string name = "rnd" + std::to_string(n) + "_" + std::to_string(seed);
  if (n == 0) return abelian(name, f, 0);
  if (rng() % 2 == 0) {
    // zero product: the bracket identity holds for any bracket tensor
    Tensor brk = zero_tensor(f, n);
    for (auto& v : brk) v = random_scalar(f, rng);
    return Awb::make(name, f, n, zero_tensor(f, n), std::move(brk));
  }
  Tensor prod = random_assoc_product(f, n, rng);
  Matrix d(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.at(i, j) = random_scalar(f, rng);
  return d_bracket(name, f, n, prod, d);
}

}  // namespace catalog
}  // namespace awb
