#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dftnum/commands.hpp"

using namespace dftnum;

namespace {

int exit_code(const std::string& args) {
  const std::string cmd = std::string(DFTNUM_CLI) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dftnum_test_" + name);
}

}  // namespace

TEST_CASE("build document") {
  const Json doc = build_document(OperatorKind::number, 5, Backend::exact);
  CHECK(doc["operator"] == "number");
  CHECK(doc["n"] == 5);
  CHECK(doc["backend"] == "exact");
  CHECK(doc["trace"] == "20/1");
  CHECK(doc["matrix"].size() == 5);
  const Json f = build_document(OperatorKind::x, 8, Backend::floating);
  CHECK(f["matrix"].size() == 8);
  CHECK_THROWS_AS(build_document(OperatorKind::dft, 6, Backend::exact), UnsupportedBackend);
}

TEST_CASE("CSV output") {
  std::ostringstream dft;
  write_csv(dft, build_float(OperatorKind::dft, 2));
  CHECK(dft.str() == "0.70710678118654757,0.70710678118654757\n0.70710678118654757,-0.70710678118654757\n");

  std::ostringstream pd;
  write_csv(pd, build_float(OperatorKind::pd, 5));
  CHECK(pd.str() == "1,0,0,0,0\n0,0,0,0,1\n0,0,0,1,0\n0,0,1,0,0\n0,1,0,0,0\n");

  std::ostringstream phi4;
  write_csv(phi4, build_float(OperatorKind::dft, 4));
  CHECK(phi4.str().find('i') != std::string::npos);
  CHECK(format_double(-0.0) == "0");
}

TEST_CASE("verify reports") {
  const RunReport r = run_verify(5, Suite::all, Backend::exact, 0.0);
  CHECK(r.checks.size() >= 30);
  CHECK(r.exit_status() == 0);
  const Json j = to_json(r);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == r.checks.size());
  CHECK(j["exit_status"] == 0);
  CHECK(j["checks"][0].contains("residual"));

  CHECK(run_verify(64, Suite::relations, Backend::floating, 1e-11).exit_status() == 0);
  CHECK(run_verify(5, Suite::spectrum5, Backend::exact, 0.0, std::string("c1")).exit_status() == 1);
  CHECK(run_verify(12, Suite::all, Backend::floating, 1e-12).exit_status() == 0);
  CHECK(parse_suite("symmetrization") == Suite::symmetrization);
  CHECK_THROWS(parse_suite("everything"));
  CHECK(default_backend(5) == Backend::exact);
  CHECK(default_backend(6) == Backend::floating);
}

TEST_CASE("spectrum documents") {
  const Json e = spectrum_document(5, OperatorKind::number, Backend::exact);
  REQUIRE(e["eigenpairs"].size() == 5);
  const std::vector<std::string> labels{"lambda0", "mu2", "lambda1", "lambda2", "mu1"};
  for (std::size_t j = 0; j < 5; ++j) CHECK(e["eigenpairs"][j]["label"] == labels[j]);
  CHECK(e["eigenvalues"].size() == 5);

  const Json x = spectrum_document(5, OperatorKind::x, Backend::exact);
  CHECK(x["eigenpairs"].size() == 5);

  const Json f = spectrum_document(8, OperatorKind::number, Backend::floating);
  CHECK(f["eigenvalues"].size() == 8);
  CHECK_FALSE(f.contains("eigenpairs"));
  CHECK_THROWS_AS(spectrum_document(5, OperatorKind::dft, Backend::exact), UnsupportedBackend);
}

TEST_CASE("report document") {
  const Json r = report_document();
  CHECK(r["trace"] == "20/1");
  CHECK(r["zeros_in_symmetrized"] == 12);
  CHECK(r["nonzeros_in_original"] == 25);
  CHECK(r["n_tilde"]["offblock_zero"] == true);
  CHECK(r["n_tilde"]["n3_matches_closed_form"] == true);
  CHECK(r["n_tilde"]["n2_matches_closed_form"] == true);
  CHECK(r["spectrum_sum"] == "20/1");
  CHECK(r["eigenvectors_orthogonal"] == true);
  CHECK(r["oracle_max_diff"].get<double>() < 1e-10);
  CHECK(r["resolutions"]["f3_tilde"]["literal_form_equals_f1_tilde"] == true);
  CHECK(r["resolutions"]["f3_tilde"]["phi2_form_is_mu2_eigenvector"] == true);
  CHECK(r["verification"]["failed"] == 0);
  std::vector<int> phases;
  for (const auto& p : r["eigenpairs"]) phases.push_back(p["dft_phase"].get<int>());
  CHECK(phases == std::vector<int>{0, 1, 2, 3, 0});
}

TEST_CASE("output is deterministic") {
  CHECK(report_document().dump() == report_document().dump());
  CHECK(to_json(run_verify(5, Suite::spectrum5, Backend::exact, 0.0)).dump() ==
        to_json(run_verify(5, Suite::spectrum5, Backend::exact, 0.0)).dump());
}

TEST_CASE("binary exit codes") {
  CHECK(exit_code("verify 5") == 0);
  CHECK(exit_code("verify 16 relations --backend float") == 0);
  CHECK(exit_code("verify 5 spectrum5 --inject-flip s2") == 1);
  CHECK(exit_code("spectrum 5 dft") == 1);
  CHECK(exit_code("build fft 5") == 1);
  CHECK(exit_code("build number 1") == 1);
  CHECK(exit_code("build dft 4 --format csv --backend exact") == 1);
  CHECK(exit_code("frobnicate") != 0);
  CHECK(exit_code("report") == 0);
}

TEST_CASE("binary writes files") {
  const auto json_path = scratch("build.json");
  REQUIRE(exit_code("build number 5 --out " + json_path.string()) == 0);
  const Json doc = Json::parse(slurp(json_path));
  CHECK(doc["trace"] == "20/1");
  std::filesystem::remove(json_path);

  const auto csv_path = scratch("pd.csv");
  REQUIRE(exit_code("build pd 5 --format csv --out " + csv_path.string()) == 0);
  CHECK(slurp(csv_path).substr(0, 10) == "1,0,0,0,0\n");
  std::filesystem::remove(csv_path);

  const auto verify_path = scratch("verify.json");
  REQUIRE(exit_code("verify 7 --out " + verify_path.string()) == 0);
  const Json v = Json::parse(slurp(verify_path));
  CHECK(v["n"] == 7);
  CHECK(v["backend"] == "float");
  std::filesystem::remove(verify_path);
}
