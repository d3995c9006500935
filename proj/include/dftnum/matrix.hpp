#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dftnum/scalar.hpp"

namespace dftnum {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
using Vector = std::vector<S>;

/// Square n×n matrix over S, row-major. The dimension is fixed at
/// construction.
template <class S>
class DenseMatrix {
 public:
  using Ops = ScalarOps<S>;

  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, S(0)) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
  }

  DenseMatrix(std::initializer_list<std::initializer_list<S>> rows)
      : DenseMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw DimensionMismatch("matrix literal is not square");
      int c = 0;
      for (const S& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int n() const { return n_; }
  S& operator()(int r, int c) { return data_[index(r, c)]; }
  const S& operator()(int r, int c) const { return data_[index(r, c)]; }

  DenseMatrix transpose() const {
    DenseMatrix t(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  DenseMatrix adjoint() const {
    DenseMatrix t(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) t(c, r) = Ops::conj((*this)(r, c));
    return t;
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Square sub-block starting at (offset, offset).
  DenseMatrix block(int offset, int size) const {
    DenseMatrix b(size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) b(r, c) = (*this)(offset + r, offset + c);
    return b;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(const S& s) {
    for (S& v : data_) v *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const S& s) { return a *= s; }
  friend DenseMatrix operator*(const S& s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator-(const DenseMatrix& a) { return a * S(-1); }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    a.check_same(b);
    const int n = a.n_;
    DenseMatrix out(n);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        const S& ark = a(r, k);
        if (Ops::is_zero(ark, 0.0)) continue;
        for (int c = 0; c < n; ++c) {
          if (Ops::is_zero(b(k, c), 0.0)) continue;
          out(r, c) += ark * b(k, c);
        }
      }
    return out;
  }

  friend Vector<S> operator*(const DenseMatrix& a, const Vector<S>& v) {
    if (static_cast<int>(v.size()) != a.n_)
      throw DimensionMismatch("matrix-vector dimension mismatch");
    Vector<S> out(v.size(), S(0));
    for (int r = 0; r < a.n_; ++r)
      for (int c = 0; c < a.n_; ++c) {
        if (Ops::is_zero(a(r, c), 0.0) || Ops::is_zero(v[static_cast<std::size_t>(c)], 0.0)) continue;
        out[static_cast<std::size_t>(r)] += a(r, c) * v[static_cast<std::size_t>(c)];
      }
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  const std::vector<S>& data() const { return data_; }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || c < 0 || r >= n_ || c >= n_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  void check_same(const DenseMatrix& o) const {
    if (o.n_ != n_)
      throw DimensionMismatch("dimension mismatch: " + std::to_string(n_) + " vs " +
                              std::to_string(o.n_));
  }

  int n_;
  std::vector<S> data_;
};

/// Largest entry magnitude (exact entries are evaluated in double).
template <class S>
double max_abs(const DenseMatrix<S>& m) {
  double out = 0.0;
  for (const S& v : m.data()) out = std::max(out, ScalarOps<S>::magnitude(v));
  return out;
}

template <class S>
double max_abs(const Vector<S>& v) {
  double out = 0.0;
  for (const S& x : v) out = std::max(out, ScalarOps<S>::magnitude(x));
  return out;
}

/// Exact backend: every entry structurally zero. Float backend: every
/// magnitude ≤ tol.
template <class S>
bool all_zero(const DenseMatrix<S>& m, double tol) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [&](const S& v) { return ScalarOps<S>::is_zero(v, tol); });
}

template <class S>
bool all_zero(const Vector<S>& v, double tol) {
  return std::all_of(v.begin(), v.end(), [&](const S& x) { return ScalarOps<S>::is_zero(x, tol); });
}

template <class S>
Vector<S> operator-(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector dimension mismatch");
  Vector<S> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

template <class S>
Vector<S> operator+(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector dimension mismatch");
  Vector<S> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <class S>
Vector<S> scale(const S& s, Vector<S> v) {
  for (S& x : v) x *= s;
  return v;
}

/// Hermitian inner product ⟨a, b⟩ = Σ conj(a_i) b_i.
template <class S>
S inner(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector dimension mismatch");
  S out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += ScalarOps<S>::conj(a[i]) * b[i];
  return out;
}

inline DenseMatrix<FloatScalar> to_float(const DenseMatrix<ExactScalar>& m) {
  DenseMatrix<FloatScalar> out(m.n());
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) out(r, c) = m(r, c).to_complex();
  return out;
}

inline DenseMatrix<FloatScalar> to_float(const DenseMatrix<FloatScalar>& m) { return m; }

inline Vector<FloatScalar> to_float(const Vector<ExactScalar>& v) {
  Vector<FloatScalar> out;
  out.reserve(v.size());
  for (const ExactScalar& x : v) out.push_back(x.to_complex());
  return out;
}

inline Vector<FloatScalar> to_float(const Vector<FloatScalar>& v) { return v; }

}  // namespace dftnum
