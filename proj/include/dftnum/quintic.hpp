#pragma once

#include <array>
#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "dftnum/rational.hpp"

namespace dftnum {

/// Element of the real quartic field K = Q(√5, s₁), where s₁ = 2 sin(2π/5)
/// and s₁² = (5 + √5)/2. Coordinates are taken in the basis
/// {1, √5, s₁, √5·s₁}; the representation is unique, so equality is
/// coordinate equality.
class RealQuintic {
 public:
  using Coords = std::array<Rational, 4>;

  RealQuintic() = default;
  RealQuintic(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT
  RealQuintic(Rational v) : c_{std::move(v), 0, 0, 0} {}  // NOLINT
  RealQuintic(Rational one, Rational sqrt5, Rational s1, Rational sqrt5_s1)
      : c_{std::move(one), std::move(sqrt5), std::move(s1), std::move(sqrt5_s1)} {}

  static RealQuintic sqrt5() { return {0, 1, 0, 0}; }
  static RealQuintic s1() { return {0, 0, 1, 0}; }

  const Coords& coords() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// True when the value lies in Q.
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  double to_double() const;

  /// Multiplicative inverse from the 4×4 rational system "x·y = 1".
  RealQuintic inverse() const;

  /// Nonnegative square root inside K, when one exists.
  std::optional<RealQuintic> sqrt_exact() const;

  RealQuintic operator-() const;
  RealQuintic& operator+=(const RealQuintic& o);
  RealQuintic& operator-=(const RealQuintic& o);
  RealQuintic& operator*=(const RealQuintic& o);

  friend RealQuintic operator+(RealQuintic a, const RealQuintic& b) { return a += b; }
  friend RealQuintic operator-(RealQuintic a, const RealQuintic& b) { return a -= b; }
  friend RealQuintic operator*(RealQuintic a, const RealQuintic& b) { return a *= b; }
  friend RealQuintic operator/(const RealQuintic& a, const RealQuintic& b) { return a * b.inverse(); }

  friend bool operator==(const RealQuintic&, const RealQuintic&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RealQuintic& x) {
    return os << x.to_string();
  }

 private:
  Coords c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

/// Element of K(i): re + i·im with re, im in K.
class ComplexQuintic {
 public:
  ComplexQuintic() = default;
  ComplexQuintic(long v) : re_(v) {}  // NOLINT
  ComplexQuintic(RealQuintic re) : re_(std::move(re)) {}  // NOLINT
  ComplexQuintic(RealQuintic re, RealQuintic im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexQuintic i() { return {0, 1}; }

  const RealQuintic& re() const { return re_; }
  const RealQuintic& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  ComplexQuintic conj() const { return {re_, -im_}; }
  /// |x|², which lies in K.
  RealQuintic norm() const { return re_ * re_ + im_ * im_; }
  ComplexQuintic inverse() const;

  ComplexQuintic operator-() const { return {-re_, -im_}; }
  ComplexQuintic& operator+=(const ComplexQuintic& o);
  ComplexQuintic& operator-=(const ComplexQuintic& o);
  ComplexQuintic& operator*=(const ComplexQuintic& o);

  friend ComplexQuintic operator+(ComplexQuintic a, const ComplexQuintic& b) { return a += b; }
  friend ComplexQuintic operator-(ComplexQuintic a, const ComplexQuintic& b) { return a -= b; }
  friend ComplexQuintic operator*(ComplexQuintic a, const ComplexQuintic& b) { return a *= b; }
  friend ComplexQuintic operator/(const ComplexQuintic& a, const ComplexQuintic& b) {
    return a * b.inverse();
  }

  friend bool operator==(const ComplexQuintic&, const ComplexQuintic&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const ComplexQuintic& x) {
    return os << x.to_string();
  }

 private:
  RealQuintic re_;
  RealQuintic im_;
};

enum class ConstantKind { s, c, q };

/// s_n = 2 sin(2πn/5), c_n = 2 cos(2πn/5), q^n = exp(2πin/5); n taken mod 5.
ComplexQuintic constant(ConstantKind kind, long n);
RealQuintic two_sin5(long n);
RealQuintic two_cos5(long n);

}  // namespace dftnum
