#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dftnum/check.hpp"
#include "dftnum/json_io.hpp"
#include "dftnum/operators.hpp"

namespace dftnum {

enum class Suite { relations, symmetrization, spectrum5, all };

Suite parse_suite(std::string_view name);
std::string to_string(Suite s);
Backend parse_backend(std::string_view name);

/// Exact for n = 5, float otherwise.
inline Backend default_backend(int n) { return n == 5 ? Backend::exact : Backend::floating; }

struct RunReport {
  std::string command;
  int n = 0;
  Backend backend = Backend::floating;
  std::string suite;
  CheckList checks;

  int exit_status() const { return all_passed(checks) ? 0 : 1; }
};

/// Runs a verification suite. `all` adds the field identities (n = 5) and
/// the Jacobi cross-validation. `flip` negates one named constant before
/// any closed form is built. Exact backend ignores tol.
RunReport run_verify(int n, Suite suite, Backend backend, double tol,
                     const std::optional<std::string>& flip = std::nullopt);

Json to_json(const RunReport& r);

/// {"operator", "n", "backend", "trace", "matrix"}. A rational trace is a
/// plain "p/q" string.
Json build_document(OperatorKind kind, int n, Backend backend);
DenseMatrix<FloatScalar> build_float(OperatorKind kind, int n);

/// Ascending eigenvalues from the Jacobi solver. With the exact backend at
/// n = 5 (number, x, y) also labeled exact eigenpairs.
Json spectrum_document(int n, OperatorKind kind, Backend backend);

/// The full N = 5 reproduction: blocks, zero census, eigenpairs, phases and
/// the resolved discrepancies.
Json report_document();

}  // namespace dftnum
