#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dftnum/commands.hpp"
#include "dftnum/json_io.hpp"

using namespace dftnum;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  os << text;
  if (!os) throw std::runtime_error("write to '" + out_path + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Backend pick_backend(const std::string& name, int n) { return name.empty() ? default_backend(n) : parse_backend(name); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DFT operator family, symmetrized blocks and the exact N = 5 number-operator spectrum"};
  app.require_subcommand(1);

  int n = 5;
  std::string backend_name, out_path, kind_name, suite_name = "all", format = "json";
  double tol = 1e-12;
  std::optional<std::string> flip;

  auto* build = app.add_subcommand("build", "write one operator matrix");
  build->add_option("kind", kind_name, "dft, c, j, pd, x, y, d, a, at, number")->required();
  build->add_option("n,--n", n, "dimension")->check(CLI::PositiveNumber);
  build->add_option("--backend", backend_name)->check(CLI::IsMember({"exact", "float"}));
  build->add_option("--out", out_path, "output file (default stdout)");
  build->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run an invariant suite; exit 1 on any failure");
  verify->add_option("n,--n", n, "dimension")->check(CLI::PositiveNumber);
  verify->add_option("suite,--suite", suite_name)
      ->check(CLI::IsMember({"relations", "symmetrization", "spectrum5", "all"}));
  verify->add_option("--backend", backend_name)->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--tol", tol)->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out_path);
  verify->add_option("--inject-flip", flip, "negate one named constant")->group("");

  std::string op_name = "number";
  auto* spectrum = app.add_subcommand("spectrum", "ascending eigenvalues of a Hermitian operator");
  spectrum->add_option("n,--n", n, "dimension")->check(CLI::PositiveNumber);
  spectrum->add_option("operator,--operator", op_name);
  spectrum->add_option("--backend", backend_name)->check(CLI::IsMember({"exact", "float"}));
  spectrum->add_option("--out", out_path);

  auto* report = app.add_subcommand("report", "full N = 5 reproduction document");
  report->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) {
      const OperatorKind kind = parse_operator_kind(kind_name);
      if (format == "csv") {
        if (backend_name == "exact") throw std::invalid_argument("csv output requires the float backend");
        std::ostringstream os;
        write_csv(os, build_float(kind, n));
        emit(os.str(), out_path);
      } else {
        emit(dump(build_document(kind, n, pick_backend(backend_name, n))), out_path);
      }
      return 0;
    }
    if (verify->parsed()) {
      const RunReport r = run_verify(n, parse_suite(suite_name), pick_backend(backend_name, n), tol, flip);
      emit(dump(to_json(r)), out_path);
      return r.exit_status();
    }
    if (spectrum->parsed()) {
      emit(dump(spectrum_document(n, parse_operator_kind(op_name), pick_backend(backend_name, n))), out_path);
      return 0;
    }
    if (report->parsed()) {
      const Json doc = report_document();
      emit(dump(doc), out_path);
      return doc["verification"]["failed"].get<int>() == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
