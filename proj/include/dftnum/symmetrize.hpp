#pragma once

#include <utility>

#include "dftnum/check.hpp"
#include "dftnum/identities.hpp"
#include "dftnum/matrix.hpp"
#include "dftnum/operators.hpp"

namespace dftnum {

/// Number of P_d-symmetric basis vectors, ⌊n/2⌋ + 1. The symmetric block
/// always comes first.
inline int sym_block_size(int n) { return n / 2 + 1; }

/// Orthogonal P_d-symmetrizer. Rows: e₀; (e_k + e_{n−k})/√2 and
/// (e_{n−k} − e_k)/√2 at positions k and n−k for 1 ≤ k ≤ ⌊(n−1)/2⌋; e_{n/2}
/// at the midpoint for even n. Coordinates transform as f̃ = T f.
template <class S>
class SymmetrizerT {
 public:
  explicit SymmetrizerT(int n);

  int n() const { return matrix_.n(); }
  int sym_size() const { return sym_block_size(n()); }
  const DenseMatrix<S>& matrix() const { return matrix_; }

  Vector<S> apply(const Vector<S>& f) const { return matrix_ * f; }
  Vector<S> unapply(const Vector<S>& ft) const { return matrix_.transpose() * ft; }

 private:
  DenseMatrix<S> matrix_;
};

template <class S>
SymmetrizerT<S> build_t(int n) {
  return SymmetrizerT<S>(n);
}

/// Plane rotation acting on coordinates (p, q): R_pp = R_qq = cos,
/// R_pq = sin, R_qp = −sin.
template <class S>
DenseMatrix<S> plane_rotation(int n, int p, int q, const S& cos, const S& sin);

/// R₁₄(π/4) and R₂₃(π/4) in dimension 5; their product is T.
template <class S>
std::pair<DenseMatrix<S>, DenseMatrix<S>> rotation_factorization_5();

/// T Z Tᵀ
template <class S>
DenseMatrix<S> conjugate_by_t(const DenseMatrix<S>& z, const SymmetrizerT<S>& t) {
  if (z.n() != t.n()) throw DimensionMismatch("conjugate_by_t: dimension mismatch");
  return t.matrix() * z * t.matrix().transpose();
}

template <class S>
struct BlockPair {
  DenseMatrix<S> sym_block;
  DenseMatrix<S> anti_block;
  double offblock_max = 0.0;
  bool offblock_zero = false;  // structural for exact, ≤ tol for float
};

/// Leading (⌊n/2⌋+1)² block, trailing block, and the largest entry outside
/// both.
template <class S>
BlockPair<S> block_split(const DenseMatrix<S>& zt, double tol = 1e-12);

struct ZeroCensus {
  int zeros = 0;
  int nonzeros = 0;
};

/// Exact: structural zeros. Float: |x| ≤ tol.
template <class S>
ZeroCensus zero_count(const DenseMatrix<S>& m, double tol = 1e-12) {
  ZeroCensus z;
  for (const S& v : m.data()) (ScalarOps<S>::is_zero(v, tol) ? z.zeros : z.nonzeros) += 1;
  return z;
}

/// f̃ split into its upper (η, symmetric) and lower (ξ, antisymmetric) parts.
template <class S>
struct SymmetrizedVector {
  Vector<S> eta;
  Vector<S> xi;

  Vector<S> full() const {
    Vector<S> out(eta);
    out.insert(out.end(), xi.begin(), xi.end());
    return out;
  }
};

template <class S>
SymmetrizedVector<S> split_symmetrized(const Vector<S>& ft) {
  const auto m = static_cast<std::ptrdiff_t>(sym_block_size(static_cast<int>(ft.size())));
  return {Vector<S>(ft.begin(), ft.begin() + m), Vector<S>(ft.begin() + m, ft.end())};
}

/// ẽ_k = T e_k (column k of T), and ε̃_k = Σ_j T_jk ε_j = Φ ẽ_k, the same
/// combination applied to the DFT basis. Exact, n = 5.
Vector<ExactScalar> symmetrized_basis_vector(BasisKind kind, int k);

/// Closed forms of the N = 5 operators in the symmetrized basis, built from
/// the given constants.
namespace closed_form {
DenseMatrix<ExactScalar> x_tilde(const QuinticConstants& k);
DenseMatrix<ExactScalar> d_tilde();
DenseMatrix<ExactScalar> a_tilde(const QuinticConstants& k);
DenseMatrix<ExactScalar> at_tilde(const QuinticConstants& k);
DenseMatrix<ExactScalar> n3(const QuinticConstants& k);
DenseMatrix<ExactScalar> n2(const QuinticConstants& k);
}  // namespace closed_form

/// Orthogonality and block structure of T for any n; for n = 5 (exact)
/// also the rotation factorization, the closed-form blocks and the
/// 12/25 zero census.
template <class S>
CheckList verify_symmetrization(int n, double tol,
                                const QuinticConstants& k = QuinticConstants::standard());

}  // namespace dftnum
