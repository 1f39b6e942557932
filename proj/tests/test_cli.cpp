#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "awb/json_io.hpp"
#include "test_helpers.hpp"

using namespace awb;
using namespace awb::testing;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;
};

fs::path work_dir() {
  auto dir = fs::temp_directory_path() / "awb_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path out = work_dir() / "out.txt";
  std::string cmd = std::string(AWB_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return RunResult{code, ss.str()};
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '(' || c == ')') c = '_';
  return s;
}

fs::path write_algebra(const std::string& name, const Field& f) {
  fs::path p = work_dir() / (sanitize(name) + "_" + f.str() + ".json");
  write_json_file(p, awb_to_json(catalog::get(name, f)));
  return p;
}

fs::path write_extension(const std::string& name, const Field& f) {
  fs::path p = work_dir() / (sanitize(name) + "_" + f.str() + "_ext.json");
  write_json_file(p, extension_to_json(catalog::get_extension(name, f)));
  return p;
}

}  // namespace

TEST_CASE("validate") {
  Field q = Field::rationals();
  auto ok = run_cli("validate " + write_algebra("heis", q).string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("OK") != std::string::npos);

  // e e = e with [e,e] = e violates the bracket identity
  fs::path bad = work_dir() / "bad.json";
  write_json_file(bad, json{{"name", "bad"},
                            {"field", json{{"kind", "rational"}}},
                            {"dim", 1},
                            {"product", json::array({json::array({0, 0, 0, "1"})})},
                            {"bracket", json::array({json::array({0, 0, 0, "1"})})}});
  auto invalid = run_cli("validate " + bad.string());
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.output.find("bracket identity") != std::string::npos);

  auto invalid_json = run_cli("--json validate " + bad.string());
  CHECK(invalid_json.exit_code == 1);
  json doc = json::parse(invalid_json.output);
  CHECK(doc["valid"] == false);
  CHECK(doc["violations"][0]["kind"] == "bracket_identity");

  CHECK(run_cli("validate /nonexistent.json").exit_code == 3);
  fs::path broken = work_dir() / "broken.json";
  std::ofstream(broken) << "{ nope";
  CHECK(run_cli("validate " + broken.string()).exit_code == 3);
}

TEST_CASE("info") {
  auto r = run_cli("info " + write_algebra("ab(3)", Field::rationals()).string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("center dim        3") != std::string::npos);
  CHECK(r.output.find("derived dim       0") != std::string::npos);
  CHECK(r.output.find("H1 dim            18") != std::string::npos);

  auto j = run_cli("--json info " + write_algebra("heis", Field::prime(2)).string());
  CHECK(j.exit_code == 0);
  json doc = json::parse(j.output);
  CHECK(doc["center_dim"] == 1);
  CHECK(doc["h1_dim"] == 13);
  CHECK(doc["stem_algebra"] == true);
  CHECK(doc["fingerprint"] == "(2,1,0,1,1)");
}

TEST_CASE("homology") {
  auto r = run_cli("homology " + write_algebra("ab(2)", Field::rationals()).string() +
                   " --degree 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dimension 8") != std::string::npos);

  auto j = run_cli("--json homology " + write_algebra("idem1", Field::rationals()).string() +
                   " --degree 1");
  json doc = json::parse(j.output);
  CHECK(doc["dim"] == 0);

  auto h0r = run_cli("--json homology " + write_algebra("heis", Field::rationals()).string() +
                     " --degree 0");
  CHECK(json::parse(h0r.output)["dim"] == 2);

  CHECK(run_cli("homology missing-degree.json").exit_code == 3);
}

TEST_CASE("theta") {
  auto r = run_cli("--json theta " + write_extension("e_heis", Field::rationals()).string());
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["image_dim"] == 1);
  CHECK(doc["kernel_dim"] == 7);
  CHECK(doc["h1_dim"] == 8);
}

TEST_CASE("isoclinic") {
  Field f2 = Field::prime(2);
  auto a = write_algebra("heis", f2);
  auto b = write_algebra("heis_x_ab1", f2);

  auto found = run_cli("--json isoclinic " + a.string() + " " + b.string());
  CHECK(found.exit_code == 0);
  json doc = json::parse(found.output);
  CHECK(doc["isoclinic"] == true);

  // store the emitted certificate and verify it
  fs::path cert = work_dir() / "cert.json";
  write_json_file(cert, doc["certificate"]);
  auto verified = run_cli("isoclinic " + a.string() + " " + b.string() + " --verify " +
                          cert.string());
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.find("VERIFIED") != std::string::npos);

  auto no = run_cli("isoclinic " + a.string() + " " +
                    write_algebra("ab(3)", f2).string());
  CHECK(no.exit_code == 1);
  CHECK(no.output.find("NOT ISOCLINIC") != std::string::npos);

  // over the rationals the decision is out of reach: exit code 2
  Field q = Field::rationals();
  auto undecided = run_cli("isoclinic " + write_algebra("heis", q).string() + " " +
                           write_algebra("heis_x_ab1", q).string());
  CHECK(undecided.exit_code == 2);
  CHECK(undecided.output.find("UNDECIDED") != std::string::npos);

  // a supplied certificate still verifies over the rationals
  Awb gq = catalog::get("heis", q), hq = catalog::get("heis_x_ab1", q);
  auto eg = CentralExtension::make(gq, center(gq));
  auto eh = CentralExtension::make(hq, center(hq));
  IsoclinismCertificate refl{Matrix::identity(q, 2), Matrix::identity(q, 1)};
  fs::path qcert = work_dir() / "qcert.json";
  write_json_file(qcert, certificate_to_json(refl, eg, eh));
  auto qverified = run_cli("isoclinic " + write_algebra("heis", q).string() + " " +
                           write_algebra("heis_x_ab1", q).string() + " --verify " +
                           qcert.string());
  CHECK(qverified.exit_code == 0);

  // extension files through --extensions
  auto e1 = write_extension("e_heis", f2);
  auto e2 = write_extension("e_heis_x_ab1", f2);
  auto ext_found = run_cli("isoclinic --extensions " + e1.string() + " " + e2.string());
  CHECK(ext_found.exit_code == 0);

  CHECK(run_cli("isoclinic " + a.string()).exit_code == 3);  // one file is not enough

  // the dimension guard stops the search before it starts
  auto guarded = run_cli("--max-dim 1 isoclinic " + a.string() + " " + b.string());
  CHECK(guarded.exit_code == 3);
  CHECK(guarded.output.find("guard") != std::string::npos);
}

TEST_CASE("extract and extend round trip") {
  auto e = write_extension("e_heis", Field::prime(2));
  fs::path fs_path = work_dir() / "fs.json";
  auto extracted = run_cli("extract " + e.string() + " -o " + fs_path.string());
  CHECK(extracted.exit_code == 0);

  fs::path rebuilt = work_dir() / "rebuilt.json";
  auto built = run_cli("extend --factorset " + fs_path.string() + " -o " + rebuilt.string());
  CHECK(built.exit_code == 0);
  CentralExtension loaded = extension_from_file(rebuilt);
  CHECK(loaded.g().dim() == 3);
  CHECK(is_stem(loaded));

  // an invalid factor set is rejected with the violating triple
  json bad{{"quotient", awb_to_json(catalog::get("idem1", Field::rationals()))},
           {"kernel_dim", 1},
           {"f", json::array()},
           {"g", json::array({json::array({0, 0, json::array({"1"})})})}};
  fs::path bad_path = work_dir() / "bad_fs.json";
  write_json_file(bad_path, bad);
  auto rejected = run_cli("extend --factorset " + bad_path.string());
  CHECK(rejected.exit_code == 1);
  CHECK(rejected.output.find("(0,0,0)") != std::string::npos);
}

TEST_CASE("stemify, split and the predicates") {
  Field f2 = Field::prime(2);
  auto ex = write_extension("e_heis_x_ab1", f2);

  CHECK(run_cli("stem-check " + ex.string()).exit_code == 1);
  CHECK(run_cli("stem-check " + write_extension("e_heis", f2).string()).exit_code == 0);

  fs::path stem_out = work_dir() / "stem.json";
  auto stm = run_cli("--json stemify " + ex.string() + " -o " + stem_out.string());
  CHECK(stm.exit_code == 0);
  json stem_doc = load_json_file(stem_out);
  CentralExtension stem = extension_from_json(stem_doc["extension"], work_dir());
  CHECK(is_stem(stem));
  CHECK(stem.g().dim() == 3);

  auto split = run_cli("split " + ex.string());
  CHECK(split.exit_code == 0);
  json split_doc = json::parse(split.output);
  CHECK(split_doc["abelian_part"]["dim"] == 1);

  CHECK(run_cli("cover-check " + write_extension("cover_ab1_a", f2).string()).exit_code == 0);
  auto not_cover = run_cli("cover-check " + write_extension("e_heis", f2).string());
  CHECK(not_cover.exit_code == 1);
  CHECK(not_cover.output.find("rank 1") != std::string::npos);
}

TEST_CASE("usage errors exit above 2") {
  CHECK(run_cli("").exit_code == 3);
  CHECK(run_cli("frobnicate x.json").exit_code == 3);
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
}
