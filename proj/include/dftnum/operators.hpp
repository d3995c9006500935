#pragma once

#include <string>
#include <string_view>

#include "dftnum/check.hpp"
#include "dftnum/matrix.hpp"

namespace dftnum {

/// The DFT operator family. All index arithmetic is mod n.
///   dft     Φ_kl = n^{-1/2} q^{kl}, q = exp(2πi/n)
///   c       cyclic shift, C_{k,k+1} = 1
///   j       backward identity
///   pd      discrete reflection CᵀJ, e_k → e_{-k}
///   x       diag(2 sin(2πk/n))
///   y       i(Cᵀ − C)
///   d       C − Cᵀ, so that A = X + iY = X + D
///   a, at   X + D and its transpose X − D
///   number  AᵀA
enum class OperatorKind { dft, c, j, pd, x, y, d, a, at, number };

OperatorKind parse_operator_kind(std::string_view name);
std::string to_string(OperatorKind kind);

/// Throws UnsupportedBackend when an exact entry falls outside K(√2)(i):
/// dft, x, a, at and number are exact only for n = 5.
template <class S>
DenseMatrix<S> build_operator(OperatorKind kind, int n);

enum class BasisKind { e, eps };

template <class S>
struct BasisVector {
  BasisKind kind;
  int index;
  Vector<S> components;

  int n() const { return static_cast<int>(components.size()); }
  std::string label() const {
    return (kind == BasisKind::e ? "e_" : "eps_") + std::to_string(index);
  }
};

/// e_k is the unit coordinate vector; ε_k = Φ e_k = n^{-1/2}(1, q^k, ..., q^{(n-1)k}).
template <class S>
BasisVector<S> basis_vector(BasisKind kind, int k, int n);

/// AB − BA
template <class S>
DenseMatrix<S> commutator(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  return a * b - b * a;
}

/// Residual of every algebraic relation of the operator family. Exact
/// backend requires tol = 0 and passes only on structural zeros.
template <class S>
CheckList verify_relations(int n, double tol);

}  // namespace dftnum
