#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dftnum/check.hpp"
#include "dftnum/identities.hpp"
#include "dftnum/matrix.hpp"

namespace dftnum {

class NonSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotASquare : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoPhaseFound : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using ExactMatrix = DenseMatrix<ExactScalar>;
using ExactVector = Vector<ExactScalar>;

/// M = [[a, b], [b, d]] = u I + M′ with M′ = [[v, b], [b, −v]], 2u = a + d,
/// 2v = a − d.
struct TwoByTwoSplit {
  ExactScalar u, v, b;
  ExactMatrix mprime{2};
};

TwoByTwoSplit split_2x2(const ExactMatrix& m);

/// μ₁ ≥ μ₂ = u ± √(v² + b²) with the root taken inside K. Throws NotASquare
/// when v² + b² has no square root in K; eig_2x2_float is the fallback.
struct Eigen2 {
  ExactScalar mu1, mu2;
};
Eigen2 eig_2x2_closed(const ExactMatrix& m);
std::array<double, 2> eig_2x2_float(const DenseMatrix<FloatScalar>& m);

/// p(λ) = λᵏ + c₁λᵏ⁻¹ + ... + c_k, where c_j is (−1)ʲ times the sum of the
/// principal j×j minors. coeffs[0] is c₁. k ∈ {2, 3}.
template <class S>
struct CharPolyCoeffs {
  std::vector<S> coeffs;
};

template <class S>
CharPolyCoeffs<S> char_poly_coeffs(const DenseMatrix<S>& m);

enum class Block { sym, anti };

inline std::string to_string(Block b) { return b == Block::sym ? "sym" : "anti"; }

/// Unnormalized eigenpair of 𝒩₃ (sym) or 𝒩₂ (anti). dft_phase k means
/// Φf = iᵏf for the assembled five-vector.
struct LabeledEigenpair {
  std::string label;
  ExactScalar value;
  ExactVector vector;
  Block block;
  std::optional<int> dft_phase;
};

/// (μ₁, (c₁, 1 + s₂)), (μ₂, (1 + s₂, −c₁)) with μ₁ = 5 + s₂(s₂ + c₁),
/// μ₂ = s₁(s₁ + c₂).
std::array<LabeledEigenpair, 2> n2_closed_spectrum(const QuinticConstants& k = QuinticConstants::standard());

/// λ₀ = 0, λ₁ = 5 + s₂(s₂ − c₁), λ₂ = s₁(s₁ − c₂) with
/// φ₀ = (s₁ − 2c₂, √2(1 + s₂), √2), φ₁ = (√2c₁, −2s₂ − 1, 2(s₂ − c₁) + 3),
/// φ₂ = (−√2c₁, 1, 1).
std::array<LabeledEigenpair, 3> n3_closed_spectrum(const QuinticConstants& k = QuinticConstants::standard());

/// One of the five N = 5 DFT eigenvectors: f̃ = (φ, 0₂) or (0₃, φ) and
/// f = Tᵀf̃.
struct DftEigenvector {
  std::string name;  // f0 … f4
  LabeledEigenpair pair;
  ExactVector f_tilde;
  ExactVector f;
};

/// Ordered f0, f1, f2, f3, f4 (λ₀, μ₁, λ₂, μ₂, λ₁), phases filled in.
std::vector<DftEigenvector> assemble_dft_eigenvectors(const QuinticConstants& k = QuinticConstants::standard());

/// The k ∈ {0, 1, 2, 3} with Φ₅f = iᵏf, decided exactly.
int dft_phase(const ExactVector& f);

/// Every closed-form claim about 𝒩₅, checked against the operators built
/// from scratch.
CheckList verify_spectrum5(const QuinticConstants& k = QuinticConstants::standard());

}  // namespace dftnum
