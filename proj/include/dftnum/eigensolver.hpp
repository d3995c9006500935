#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dftnum/check.hpp"
#include "dftnum/matrix.hpp"

namespace dftnum {

class NonHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ascending eigenvalues; column j of `vectors` belongs to values[j].
struct EigenDecomposition {
  std::vector<double> values;
  DenseMatrix<FloatScalar> vectors{1};
  int sweeps_used = 0;
  double offdiag_final = 0.0;

  Vector<FloatScalar> vector(int j) const;
};

/// Cyclic Jacobi for Hermitian matrices: row-major (p, q) sweeps with
/// phase-absorbing complex rotations, until the off-diagonal Frobenius norm
/// drops below tol·‖M‖_F. Eigenvectors of clustered eigenvalues (gap < 1e-8)
/// are re-orthonormalized.
EigenDecomposition jacobi_eigh(const DenseMatrix<FloatScalar>& m, double tol = 1e-13,
                               int max_sweeps = 50);

/// ‖Mv − λv‖∞ / max(1, ‖v‖∞)
double residual(const DenseMatrix<FloatScalar>& m, double value, const Vector<FloatScalar>& v);

/// Groups of consecutive (ascending) eigenvalue indices whose neighbours are
/// closer than gap.
std::vector<std::pair<int, int>> eigenvalue_clusters(const std::vector<double>& values,
                                                     double gap = 1e-8);

struct ValidationReport {
  int n = 0;
  std::vector<double> spectrum;          // of 𝒩_n
  std::vector<double> spectrum_tilde;    // of T 𝒩_n Tᵀ
  int sym_support = 0;                   // eigenvectors living on the symmetric block
  int anti_support = 0;
  CheckList checks;

  bool passed() const { return all_passed(checks); }
};

/// Diagonalizes 𝒩_n and Ñ_n = T𝒩_nTᵀ numerically and checks: equal
/// spectra, nonnegativity, trace, and that every eigenvector of Ñ_n lives on
/// one parity block (per cluster for degenerate eigenvalues).
ValidationReport cross_validate(int n);

}  // namespace dftnum
