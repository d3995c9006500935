#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dftnum/quintic.hpp"

namespace dftnum {

/// Raised when an exact value is requested outside the field K(√2)(i).
class UnsupportedBackend : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact scalar k + r2·√2 with k, r2 in K(i). The symmetrizer T carries
/// 1/√2, and √2 ∉ K(i), so the exact backend works in K(i)(√2).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : k_(v) {}  // NOLINT
  ExactScalar(RealQuintic v) : k_(std::move(v)) {}  // NOLINT
  ExactScalar(ComplexQuintic k) : k_(std::move(k)) {}  // NOLINT
  ExactScalar(ComplexQuintic k, ComplexQuintic r2) : k_(std::move(k)), r2_(std::move(r2)) {}

  static ExactScalar sqrt2() { return {ComplexQuintic(0), ComplexQuintic(1)}; }
  static ExactScalar i() { return ComplexQuintic::i(); }

  /// The part without √2 and the coefficient of √2.
  const ComplexQuintic& k() const { return k_; }
  const ComplexQuintic& r2() const { return r2_; }

  bool is_zero() const { return k_.is_zero() && r2_.is_zero(); }
  bool in_k() const { return r2_.is_zero(); }
  bool is_real() const { return k_.is_real() && r2_.is_real(); }
  std::complex<double> to_complex() const {
    return k_.to_complex() + std::sqrt(2.0) * r2_.to_complex();
  }

  ExactScalar conj() const { return {k_.conj(), r2_.conj()}; }
  ExactScalar inverse() const;

  ExactScalar operator-() const { return {-k_, -r2_}; }
  ExactScalar& operator+=(const ExactScalar& o) {
    k_ += o.k_;
    r2_ += o.r2_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    k_ -= o.k_;
    r2_ -= o.r2_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    ComplexQuintic k = k_ * o.k_ + ComplexQuintic(2) * r2_ * o.r2_;
    ComplexQuintic r2 = k_ * o.r2_ + r2_ * o.k_;
    k_ = std::move(k);
    r2_ = std::move(r2);
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    os << x.k_;
    if (!x.r2_.is_zero()) os << " + sqrt2*(" << x.r2_ << ")";
    return os;
  }

 private:
  ComplexQuintic k_;
  ComplexQuintic r2_;
};

inline ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero exact scalar");
  // (k + r√2)(k − r√2) = k² − 2r², nonzero because √2 ∉ K(i).
  ComplexQuintic inv = (k_ * k_ - ComplexQuintic(2) * r2_ * r2_).inverse();
  return {k_ * inv, -(r2_ * inv)};
}

using FloatScalar = std::complex<double>;

enum class Backend { exact, floating };

inline std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

/// exp(2πik/n). Quarter turns are exact and q^{n−m} = conj(q^m) bit for bit:
/// every angle goes through one out-of-line evaluation on [0, π].
FloatScalar float_root_of_unity(long k, int n);

/// Per-ring primitives used by the generic operator and matrix code.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<FloatScalar> {
  static constexpr bool exact = false;
  static FloatScalar from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static FloatScalar i() { return {0.0, 1.0}; }
  static FloatScalar conj(const FloatScalar& x) { return std::conj(x); }
  static double magnitude(const FloatScalar& x) { return std::abs(x); }
  static bool is_zero(const FloatScalar& x, double tol) { return std::abs(x) <= tol; }
  static FloatScalar to_complex(const FloatScalar& x) { return x; }
  static FloatScalar two_sin(long k, int n) { return {2.0 * root_of_unity(k, n).imag(), 0.0}; }
  static FloatScalar root_of_unity(long k, int n) { return float_root_of_unity(k, n); }
  static FloatScalar inv_sqrt(int n) { return {std::sqrt(1.0 / n), 0.0}; }
  static FloatScalar inv_sqrt2() { return {std::sqrt(0.5), 0.0}; }
};

template <>
struct ScalarOps<ExactScalar> {
  static constexpr bool exact = true;
  static ExactScalar from_int(long v) { return ExactScalar(v); }
  static ExactScalar i() { return ExactScalar::i(); }
  static ExactScalar conj(const ExactScalar& x) { return x.conj(); }
  static double magnitude(const ExactScalar& x) { return x.is_zero() ? 0.0 : std::abs(x.to_complex()); }
  /// Structural zero test; the tolerance is ignored.
  static bool is_zero(const ExactScalar& x, double /*tol*/) { return x.is_zero(); }
  static FloatScalar to_complex(const ExactScalar& x) { return x.to_complex(); }
  static ExactScalar two_sin(long k, int n) {
    require_quintic(n);
    return two_sin5(k);
  }
  static ExactScalar root_of_unity(long k, int n) {
    require_quintic(n);
    return constant(ConstantKind::q, k);
  }
  static ExactScalar inv_sqrt(int n) {
    switch (n) {
      case 1: return 1;
      case 2: return inv_sqrt2();
      case 4: return RealQuintic(Rational(1, 2));
      case 5: return RealQuintic(0, Rational(1, 5), 0, 0);
      default: throw UnsupportedBackend("exact 1/sqrt(n) unavailable for n = " + std::to_string(n));
    }
  }
  static ExactScalar inv_sqrt2() { return {ComplexQuintic(0), RealQuintic(Rational(1, 2))}; }

 private:
  static void require_quintic(int n) {
    if (n != 5)
      throw UnsupportedBackend("exact trigonometric constants require n = 5, got n = " +
                               std::to_string(n));
  }
};

}  // namespace dftnum
