#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "awb/json_io.hpp"
#include "test_helpers.hpp"

using namespace awb;
using namespace awb::testing;
using nlohmann::json;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "awb_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("scalar and field json") {
  Field q = Field::rationals(), f3 = Field::prime(3);
  CHECK(field_from_json(field_to_json(q)) == q);
  CHECK(field_from_json(field_to_json(f3)) == f3);
  CHECK_THROWS_AS(field_from_json(json{{"kind", "complex"}}), ParseError);
  CHECK_THROWS_AS(field_from_json(json{{"kind", "prime"}, {"p", 4}}), ParseError);

  Scalar s = Scalar::parse(q, "-7/3");
  CHECK(scalar_from_json(q, scalar_to_json(s)) == s);
  CHECK(scalar_to_json(s).is_string());
  Scalar r = Scalar::of_int(f3, 2);
  CHECK(scalar_from_json(f3, scalar_to_json(r)) == r);
  CHECK(scalar_to_json(r).is_number());
  // parsers accept both encodings
  CHECK(scalar_from_json(f3, json("2")) == r);
  CHECK(scalar_from_json(q, json(-2)) == Scalar::of_int(q, -2));
  CHECK_THROWS_AS(scalar_from_json(q, json(json::array())), ParseError);
}

TEST_CASE("algebra round trip, canonical emission") {
  for (const Field& f : all_fields())
    for (const std::string& name : catalog::list()) {
      Awb a = catalog::get(name, f);
      json j = awb_to_json(a);
      Awb back = awb_from_json(j);
      CHECK(back.same_structure(a));
      CHECK(back.name() == a.name());
      CHECK(awb_to_json(back).dump() == j.dump());  // emission is stable
    }
}

TEST_CASE("algebra parse errors carry context") {
  json good = awb_to_json(catalog::get("heis", Field::rationals()));

  json missing = good;
  missing.erase("dim");
  CHECK_THROWS_WITH_AS(awb_from_json(missing), "algebra: missing field 'dim'", ParseError);

  json bad_index = good;
  bad_index["bracket"] = json::array({json::array({0, 1, 5, "1"})});
  CHECK_THROWS_AS(awb_from_json(bad_index), ParseError);

  json bad_value = good;
  bad_value["bracket"] = json::array({json::array({0, 1, 2, "x"})});
  CHECK_THROWS_AS(awb_from_json(bad_value), ParseError);

  // invalid structure constants surface as a validation error, not a parse error
  json invalid = good;
  invalid["product"] = json::array({json::array({0, 0, 0, "1"}),
                                    json::array({1, 0, 0, "1"}),
                                    json::array({0, 0, 1, "1"})});
  CHECK_THROWS_AS(awb_from_json(invalid), AwbValidationError);
}

TEST_CASE("extension round trip and file references") {
  auto dir = temp_dir();
  for (const Field& f : all_fields()) {
    CentralExtension e = catalog::get_extension("e_heis", f);
    json j = extension_to_json(e);
    CentralExtension back = extension_from_json(j, dir);
    CHECK(back.g().same_structure(e.g()));
    CHECK(back.n() == e.n());
    CHECK(extension_to_json(back).dump() == j.dump());
  }

  // algebra by file reference, resolved relative to the extension file
  Field f2 = Field::prime(2);
  write_json_file(dir / "heis.json", awb_to_json(catalog::get("heis", f2)));
  json ext{{"algebra", "heis.json"},
           {"kernel", json::array({json::array({0, 0, 1})})}};
  write_json_file(dir / "ext.json", ext);
  CentralExtension loaded = extension_from_file(dir / "ext.json");
  CHECK(loaded.n_dim() == 1);
  CHECK(loaded.q().dim() == 2);

  json bad_row = ext;
  bad_row["kernel"] = json::array({json::array({0, 0})});
  CHECK_THROWS_AS(extension_from_json(bad_row, dir), ParseError);

  // a non-central kernel is rejected on load
  json non_central{{"algebra", awb_to_json(catalog::get("taut_u2", f2))},
                   {"kernel", json::array({json::array({0, 1, 0})})}};
  CHECK_THROWS_AS(extension_from_json(non_central, dir), NotCentralError);
}

TEST_CASE("factor set round trip") {
  auto dir = temp_dir();
  for (const Field& f : all_fields()) {
    CentralExtension e = catalog::get_extension("e_heis", f);
    FactorSet fs = extract_factor_set(e);
    json j = factor_set_to_json(fs);
    FactorSet back = factor_set_from_json(j, dir);
    CHECK(back.m == fs.m);
    CHECK(back.q.same_structure(fs.q));
    for (std::size_t i = 0; i < fs.f.size(); ++i) {
      CHECK(back.f[i] == fs.f[i]);
      CHECK(back.g[i] == fs.g[i]);
    }
    CHECK(factor_set_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("certificate round trip checks the stored bases") {
  Field f2 = Field::prime(2);
  auto e1 = catalog::get_extension("e_heis", f2);
  auto e2 = catalog::get_extension("e_heis_x_ab1", f2);
  Decision dec = decide_extension_isoclinism(e1, e2);
  REQUIRE(dec.status == DecisionStatus::Found);

  json j = certificate_to_json(*dec.certificate, e1, e2);
  IsoclinismCertificate back = certificate_from_json(j, e1, e2);
  CHECK(back.eta == dec.certificate->eta);
  CHECK(back.xi == dec.certificate->xi);
  CHECK(verify_certificate(e1, e2, back).ok());

  // verifying against mismatched extensions is caught by the stored bases
  auto other = catalog::get_extension("triv_taut_u2", f2);
  CHECK_THROWS_AS(certificate_from_json(j, e1, other), ParseError);
}

TEST_CASE("file loading errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
  auto dir = temp_dir();
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK_THROWS_AS(load_json_file(dir / "broken.json"), ParseError);
}
