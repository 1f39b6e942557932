#pragma once

#include <filesystem>

#include <nlohmann/json_fwd.hpp>

#include "awb/factor_set.hpp"
#include "awb/isoclinism.hpp"

namespace awb {

/// File formats. Scalars are bit-exact: rationals travel as strings "a/b" or
/// "a", prime-field residues as integers. Parsers accept either form.
///
/// Algebra file:   { "name", "field": {"kind":"rational"|"prime","p"},
///                   "dim", "product": [[i,j,k,value]...], "bracket": [...] }
/// Extension file: { "algebra": <algebra object or file path>,
///                   "kernel": [[row]...] }       (rows in algebra coordinates)
/// Factor set:     { "quotient": <algebra object or file path>, "kernel_dim",
///                   "f": [[i,j,[values]]...], "g": [...] }
/// Certificate:    { "eta": <matrix>, "xi": <matrix>,
///                   "bases": {"derived1": <matrix>, "derived2": <matrix>} }
/// Matrices:       { "rows", "cols", "entries": [[value]...] }

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json awb_to_json(const Awb& a);
Awb awb_from_json(const nlohmann::json& j);

nlohmann::json extension_to_json(const CentralExtension& e);
/// base_dir resolves a relative "algebra" file reference.
CentralExtension extension_from_json(const nlohmann::json& j,
                                     const std::filesystem::path& base_dir);

nlohmann::json factor_set_to_json(const FactorSet& fs);
FactorSet factor_set_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

nlohmann::json certificate_to_json(const IsoclinismCertificate& cert, const CentralExtension& e1,
                                   const CentralExtension& e2);
/// Re-checks that the stored derived bases match recomputation, so a stored
/// certificate stays verifiable across runs.
IsoclinismCertificate certificate_from_json(const nlohmann::json& j, const CentralExtension& e1,
                                            const CentralExtension& e2);

nlohmann::json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

Awb awb_from_file(const std::filesystem::path& path);
CentralExtension extension_from_file(const std::filesystem::path& path);
FactorSet factor_set_from_file(const std::filesystem::path& path);

}  // namespace awb
