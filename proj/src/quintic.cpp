#include "dftnum/quintic.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace dftnum {

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kS1 = std::sqrt((5.0 + std::sqrt(5.0)) / 2.0);

// Q(√5) element a + b√5; K is this field adjoined s₁.
struct Golden {
  Rational a, b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  double to_double() const { return a.to_double() + b.to_double() * kSqrt5; }

  friend Golden operator+(const Golden& x, const Golden& y) { return {x.a + y.a, x.b + y.b}; }
  friend Golden operator-(const Golden& x, const Golden& y) { return {x.a - y.a, x.b - y.b}; }
  friend Golden operator*(const Golden& x, const Golden& y) {
    return {x.a * y.a + Rational(5) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Golden operator*(const Rational& r, const Golden& y) { return {r * y.a, r * y.b}; }
  friend bool operator==(const Golden&, const Golden&) = default;

  Golden inverse() const {
    // (a + b√5)(a − b√5) = a² − 5b², nonzero for nonzero input since √5 ∉ Q.
    Rational n = a * a - Rational(5) * b * b;
    if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt5)");
    return {a / n, -b / n};
  }

  // Nonnegative square root within Q(√5).
  std::optional<Golden> sqrt_exact() const {
    if (b.is_zero()) {
      if (auto r = a.sqrt_exact()) return Golden{*r, 0};
      if (auto r = (a / Rational(5)).sqrt_exact()) return Golden{0, *r};
      return std::nullopt;
    }
    // (α + β√5)² = α² + 5β² + 2αβ√5, so 4α⁴ − 4aα² + 5b² = 0.
    auto disc = (a * a - Rational(5) * b * b).sqrt_exact();
    if (!disc) return std::nullopt;
    for (const Rational& alpha_sq : {(a + *disc) / Rational(2), (a - *disc) / Rational(2)}) {
      auto alpha = alpha_sq.sqrt_exact();
      if (!alpha || alpha->is_zero()) continue;
      Golden root{*alpha, b / (Rational(2) * *alpha)};
      if (root * root == *this) return root.to_double() < 0 ? Golden{-root.a, -root.b} : root;
    }
    return std::nullopt;
  }
};

// s₁² = (5 + √5)/2
const Golden& s1_squared() {
  static const Golden m{Rational(5, 2), Rational(1, 2)};
  return m;
}

Golden upper(const RealQuintic& x) { return {x[0], x[1]}; }
Golden lower(const RealQuintic& x) { return {x[2], x[3]}; }
RealQuintic join(const Golden& p, const Golden& q) { return {p.a, p.b, q.a, q.b}; }

}  // namespace

bool RealQuintic::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

double RealQuintic::to_double() const {
  return c_[0].to_double() + c_[1].to_double() * kSqrt5 + c_[2].to_double() * kS1 +
         c_[3].to_double() * kSqrt5 * kS1;
}

RealQuintic RealQuintic::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

RealQuintic& RealQuintic::operator+=(const RealQuintic& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

RealQuintic& RealQuintic::operator-=(const RealQuintic& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

RealQuintic& RealQuintic::operator*=(const RealQuintic& o) {
  // (p + q s₁)(p' + q' s₁) = pp' + qq' s₁² + (pq' + qp') s₁
  Golden p = upper(*this), q = lower(*this);
  Golden pp = upper(o), qq = lower(o);
  *this = join(p * pp + q * qq * s1_squared(), p * qq + q * pp);
  return *this;
}

RealQuintic RealQuintic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in K");
  // Column j holds the coordinates of x·b_j for the basis b_j.
  std::array<RealQuintic, 4> basis{RealQuintic(1, 0, 0, 0), RealQuintic(0, 1, 0, 0),
                                   RealQuintic(0, 0, 1, 0), RealQuintic(0, 0, 0, 1)};
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(5, Rational(0)));
  for (std::size_t j = 0; j < 4; ++j) {
    RealQuintic col = *this * basis[j];
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  m[0][4] = Rational(1);
  // Gauss-Jordan over Q; nonsingular because K is a field and x ≠ 0.
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && m[piv][col].is_zero()) ++piv;
    if (piv == 4) throw DivisionByZero("singular multiplication matrix in K");
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (std::size_t k = col; k < 5; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

std::optional<RealQuintic> RealQuintic::sqrt_exact() const {
  if (is_zero()) return RealQuintic(0);
  Golden p = upper(*this), q = lower(*this);
  std::vector<RealQuintic> candidates;
  if (q.is_zero()) {
    if (auto r = p.sqrt_exact()) candidates.push_back(join(*r, {0, 0}));
    // (β s₁)² = β² s₁²
    if (auto r = (p * s1_squared().inverse()).sqrt_exact()) candidates.push_back(join({0, 0}, *r));
  } else {
    // (α + β s₁)² = α² + β² m + 2αβ s₁ with m = s₁², so 4α⁴ − 4pα² + q²m = 0.
    if (auto disc = (p * p - q * q * s1_squared()).sqrt_exact()) {
      for (const Golden& alpha_sq : {Rational(1, 2) * (p + *disc), Rational(1, 2) * (p - *disc)}) {
        auto alpha = alpha_sq.sqrt_exact();
        if (!alpha || alpha->is_zero()) continue;
        Golden beta = Rational(1, 2) * (q * alpha->inverse());
        candidates.push_back(join(*alpha, beta));
      }
    }
  }
  for (RealQuintic& r : candidates) {
    if (r * r == *this) return r.to_double() < 0 ? -r : r;
  }
  return std::nullopt;
}

std::string RealQuintic::to_string() const {
  std::ostringstream os;
  os << "[" << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << "]";
  return os.str();
}

ComplexQuintic& ComplexQuintic::operator+=(const ComplexQuintic& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexQuintic& ComplexQuintic::operator-=(const ComplexQuintic& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexQuintic& ComplexQuintic::operator*=(const ComplexQuintic& o) {
  RealQuintic re = re_ * o.re_ - im_ * o.im_;
  RealQuintic im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexQuintic ComplexQuintic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in K(i)");
  RealQuintic inv_norm = norm().inverse();
  return {re_ * inv_norm, -(im_ * inv_norm)};
}

std::string ComplexQuintic::to_string() const {
  return re_.to_string() + " + i" + im_.to_string();
}

RealQuintic two_cos5(long n) {
  switch (((n % 5) + 5) % 5) {
    case 0: return RealQuintic(2);
    case 1:
    case 4: return {Rational(-1, 2), Rational(1, 2), 0, 0};
    default: return {Rational(-1, 2), Rational(-1, 2), 0, 0};
  }
}

RealQuintic two_sin5(long n) {
  switch (((n % 5) + 5) % 5) {
    case 0: return RealQuintic(0);
    case 1: return RealQuintic::s1();
    case 2: return {0, 0, Rational(-1, 2), Rational(1, 2)};  // c₁·s₁
    case 3: return {0, 0, Rational(1, 2), Rational(-1, 2)};
    default: return -RealQuintic::s1();
  }
}

ComplexQuintic constant(ConstantKind kind, long n) {
  switch (kind) {
    case ConstantKind::s: return two_sin5(n);
    case ConstantKind::c: return two_cos5(n);
    case ConstantKind::q: {
      RealQuintic half(Rational(1, 2));
      return {two_cos5(n) * half, two_sin5(n) * half};
    }
  }
  return {};
}

}  // namespace dftnum
