#include "awb/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace awb {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

bool is_index(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

std::size_t need_size(const json& j, const char* key, const char* what) {
  const json& v = need(j, key, what);
  if (!is_index(v))
    throw ParseError(std::string(what) + ": field '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.prime()}};
}

Field field_from_json(const json& j) {
  std::string kind = need(j, "kind", "field").get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    std::size_t p = need_size(j, "p", "field");
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field: unknown kind '" + kind + "'");
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.str();
  return s.residue();
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::of_int(f, j.get<long long>());
  throw ParseError("scalar value must be a string or an integer, got " + j.dump());
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t jcol = 0; jcol < m.cols(); ++jcol) row.push_back(scalar_to_json(m.at(i, jcol)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Field& f, const json& j) {
  std::size_t rows = need_size(j, "rows", "matrix");
  std::size_t cols = need_size(j, "cols", "matrix");
  const json& entries = need(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError("matrix: 'entries' must be an array of " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix: row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(f, row[c]);
  }
  return m;
}

namespace {

json tensor_to_json(std::size_t n, const Tensor& t) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = t[tensor_index(n, i, j, k)];
        if (!s.is_zero()) out.push_back(json::array({i, j, k, scalar_to_json(s)}));
      }
  return out;
}

Tensor tensor_from_json(const Field& f, std::size_t n, const json& j, const char* what) {
  Tensor t = zero_tensor(f, n);
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of sparse entries");
  for (std::size_t e = 0; e < j.size(); ++e) {
    const json& entry = j[e];
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError(std::string(what) + " entry " + std::to_string(e) +
                       " must be [i, j, k, value]");
    std::size_t idx[3];
    for (int c = 0; c < 3; ++c) {
      if (!is_index(entry[c]))
        throw ParseError(std::string(what) + " entry " + std::to_string(e) +
                         ": indices must be non-negative integers");
      idx[c] = entry[c].get<std::size_t>();
      if (idx[c] >= n)
        throw ParseError(std::string(what) + " entry " + std::to_string(e) + ": index " +
                         std::to_string(idx[c]) + " out of range for dimension " +
                         std::to_string(n));
    }
    t[tensor_index(n, idx[0], idx[1], idx[2])] = scalar_from_json(f, entry[3]);
  }
  return t;
}

}  // namespace

json awb_to_json(const Awb& a) {
  return json{{"name", a.name()},
              {"field", field_to_json(a.field())},
              {"dim", a.dim()},
              {"product", tensor_to_json(a.dim(), a.product())},
              {"bracket", tensor_to_json(a.dim(), a.bracket())}};
}

Awb awb_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra: expected a JSON object");
  std::string name = need(j, "name", "algebra").get<std::string>();
  Field f = field_from_json(need(j, "field", "algebra"));
  std::size_t dim = need_size(j, "dim", "algebra");
  Tensor prod = tensor_from_json(f, dim, need(j, "product", "algebra"), "product");
  Tensor brk = tensor_from_json(f, dim, need(j, "bracket", "algebra"), "bracket");
  return Awb::make(std::move(name), f, dim, std::move(prod), std::move(brk));
}

namespace {

Awb awb_from_json_or_ref(const json& j, const std::filesystem::path& base_dir, const char* what) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return awb_from_file(p);
  }
  if (j.is_object()) return awb_from_json(j);
  throw ParseError(std::string(what) + ": expected an algebra object or a file path");
}

}  // namespace

json extension_to_json(const CentralExtension& e) {
  json kernel = json::array();
  for (std::size_t r = 0; r < e.n_dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < e.g().dim(); ++c)
      row.push_back(scalar_to_json(e.n().basis().at(r, c)));
    kernel.push_back(std::move(row));
  }
  return json{{"algebra", awb_to_json(e.g())}, {"kernel", std::move(kernel)}};
}

CentralExtension extension_from_json(const json& j, const std::filesystem::path& base_dir) {
  Awb g = awb_from_json_or_ref(need(j, "algebra", "extension"), base_dir, "extension algebra");
  const json& kernel = need(j, "kernel", "extension");
  if (!kernel.is_array()) throw ParseError("extension: 'kernel' must be an array of rows");
  Matrix rows(g.field(), kernel.size(), g.dim());
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    const json& row = kernel[r];
    if (!row.is_array() || row.size() != g.dim())
      throw ParseError("extension: kernel row " + std::to_string(r) + " must have " +
                       std::to_string(g.dim()) + " entries");
    for (std::size_t c = 0; c < g.dim(); ++c)
      rows.at(r, c) = scalar_from_json(g.field(), row[c]);
  }
  return CentralExtension::make(g, Subspace::span(rows));
}

json factor_set_to_json(const FactorSet& fs) {
  auto map_to_json = [&](const std::vector<Matrix>& values) {
    json out = json::array();
    for (std::size_t i = 0; i < fs.q.dim(); ++i)
      for (std::size_t j = 0; j < fs.q.dim(); ++j) {
        const Matrix& v = values[i * fs.q.dim() + j];
        if (v.is_zero()) continue;
        json vals = json::array();
        for (std::size_t k = 0; k < fs.m; ++k) vals.push_back(scalar_to_json(v.at(0, k)));
        out.push_back(json::array({i, j, std::move(vals)}));
      }
    return out;
  };
  return json{{"quotient", awb_to_json(fs.q)},
              {"kernel_dim", fs.m},
              {"f", map_to_json(fs.f)},
              {"g", map_to_json(fs.g)}};
}

FactorSet factor_set_from_json(const json& j, const std::filesystem::path& base_dir) {
  Awb q = awb_from_json_or_ref(need(j, "quotient", "factor set"), base_dir, "factor set quotient");
  std::size_t m = need_size(j, "kernel_dim", "factor set");
  FactorSet fs = FactorSet::zero(q, m);
  auto load_map = [&](const json& entries, std::vector<Matrix>& target, const char* what) {
    if (!entries.is_array())
      throw ParseError(std::string("factor set: '") + what + "' must be an array");
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const json& entry = entries[e];
      if (!entry.is_array() || entry.size() != 3 || !is_index(entry[0]) ||
          !is_index(entry[1]) || !entry[2].is_array())
        throw ParseError(std::string("factor set: '") + what + "' entry " + std::to_string(e) +
                         " must be [i, j, [values]]");
      std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>();
      if (i >= q.dim() || jj >= q.dim())
        throw ParseError(std::string("factor set: '") + what + "' entry " + std::to_string(e) +
                         ": index out of range");
      if (entry[2].size() != m)
        throw ParseError(std::string("factor set: '") + what + "' entry " + std::to_string(e) +
                         " must carry " + std::to_string(m) + " values");
      Matrix v(q.field(), 1, m);
      for (std::size_t k = 0; k < m; ++k) v.at(0, k) = scalar_from_json(q.field(), entry[2][k]);
      target[i * q.dim() + jj] = std::move(v);
    }
  };
  load_map(need(j, "f", "factor set"), fs.f, "f");
  load_map(need(j, "g", "factor set"), fs.g, "g");
  return fs;
}

json certificate_to_json(const IsoclinismCertificate& cert, const CentralExtension& e1,
                         const CentralExtension& e2) {
  return json{{"eta", matrix_to_json(cert.eta)},
              {"xi", matrix_to_json(cert.xi)},
              {"bases",
               json{{"derived1", matrix_to_json(derived(e1.g()).basis())},
                    {"derived2", matrix_to_json(derived(e2.g()).basis())}}}};
}

IsoclinismCertificate certificate_from_json(const json& j, const CentralExtension& e1,
                                            const CentralExtension& e2) {
  const Field& f = e1.g().field();
  Matrix eta = matrix_from_json(f, need(j, "eta", "certificate"));
  Matrix xi = matrix_from_json(f, need(j, "xi", "certificate"));
  const json& bases = need(j, "bases", "certificate");
  Matrix d1 = matrix_from_json(f, need(bases, "derived1", "certificate bases"));
  Matrix d2 = matrix_from_json(f, need(bases, "derived2", "certificate bases"));
  if (!(d1 == derived(e1.g()).basis()) || !(d2 == derived(e2.g()).basis()))
    throw ParseError("certificate: stored derived bases do not match the extensions");
  return IsoclinismCertificate{std::move(eta), std::move(xi)};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("file '" + path.string() + "': " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

Awb awb_from_file(const std::filesystem::path& path) {
  return awb_from_json(load_json_file(path));
}

CentralExtension extension_from_file(const std::filesystem::path& path) {
  return extension_from_json(load_json_file(path), path.parent_path());
}

FactorSet factor_set_from_file(const std::filesystem::path& path) {
  return factor_set_from_json(load_json_file(path), path.parent_path());
}

}  // namespace awb
