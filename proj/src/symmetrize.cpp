#include "dftnum/symmetrize.hpp"

#include <stdexcept>
#include <string>

namespace dftnum {

namespace {

using EM = DenseMatrix<ExactScalar>;

ExactScalar sqrt2() { return ExactScalar::sqrt2(); }

// 1/√10 = √2·√5/10
ExactScalar inv_sqrt10() {
  return {ComplexQuintic(0), RealQuintic(0, Rational(1, 10), 0, 0)};
}

template <class S>
DenseMatrix<S> convert(const EM& m);

template <>
EM convert<ExactScalar>(const EM& m) {
  return m;
}

template <>
DenseMatrix<FloatScalar> convert<FloatScalar>(const EM& m) {
  return to_float(m);
}

template <class S>
Check matrix_check(std::string name, const DenseMatrix<S>& residual, double tol) {
  double r = max_abs(residual);
  bool ok = ScalarOps<S>::exact ? all_zero(residual, 0.0) : r <= tol;
  return {std::move(name), ok, r, ScalarOps<S>::exact ? "exact" : "max-abs"};
}

template <class S>
Check scalar_check(std::string name, const S& diff, double tol) {
  double r = ScalarOps<S>::magnitude(diff);
  bool ok = ScalarOps<S>::exact ? ScalarOps<S>::is_zero(diff, 0.0) : r <= tol;
  return {std::move(name), ok, r, ScalarOps<S>::exact ? "exact" : "abs"};
}

template <class S>
Check vector_check(std::string name, const Vector<S>& residual, double tol) {
  double r = max_abs(residual);
  bool ok = ScalarOps<S>::exact ? all_zero(residual, 0.0) : r <= tol;
  return {std::move(name), ok, r, ScalarOps<S>::exact ? "exact" : "max-abs"};
}

template <class S>
S frobenius_squared(const DenseMatrix<S>& m) {
  S out(0);
  for (const S& v : m.data()) out += ScalarOps<S>::conj(v) * v;
  return out;
}

// diag(+1, ..., +1, −1, ..., −1) with ⌊n/2⌋+1 leading ones.
template <class S>
DenseMatrix<S> parity_diagonal(int n) {
  DenseMatrix<S> p(n);
  for (int i = 0; i < n; ++i) p(i, i) = S(i < sym_block_size(n) ? 1 : -1);
  return p;
}

}  // namespace

template <class S>
SymmetrizerT<S>::SymmetrizerT(int n) : matrix_(n) {
  if (n < 2) throw std::invalid_argument("symmetrizer dimension must be at least 2");
  const S h = ScalarOps<S>::inv_sqrt2();
  matrix_(0, 0) = S(1);
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    matrix_(k, k) = h;
    matrix_(k, n - k) = h;
    matrix_(n - k, n - k) = h;
    matrix_(n - k, k) = -h;
  }
  if (n % 2 == 0) matrix_(n / 2, n / 2) = S(1);
}

template <class S>
DenseMatrix<S> plane_rotation(int n, int p, int q, const S& cos, const S& sin) {
  DenseMatrix<S> r = DenseMatrix<S>::identity(n);
  r(p, p) = cos;
  r(q, q) = cos;
  r(p, q) = sin;
  r(q, p) = -sin;
  return r;
}

template <class S>
std::pair<DenseMatrix<S>, DenseMatrix<S>> rotation_factorization_5() {
  const S h = ScalarOps<S>::inv_sqrt2();  // cos(π/4) = sin(π/4)
  return {plane_rotation<S>(5, 1, 4, h, h), plane_rotation<S>(5, 2, 3, h, h)};
}

template <class S>
BlockPair<S> block_split(const DenseMatrix<S>& zt, double tol) {
  const int n = zt.n();
  const int m = sym_block_size(n);
  BlockPair<S> out{zt.block(0, m), zt.block(m, n - m), 0.0, true};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if ((r < m) == (c < m)) continue;
      out.offblock_max = std::max(out.offblock_max, ScalarOps<S>::magnitude(zt(r, c)));
      if (!ScalarOps<S>::is_zero(zt(r, c), ScalarOps<S>::exact ? 0.0 : tol)) out.offblock_zero = false;
    }
  return out;
}

Vector<ExactScalar> symmetrized_basis_vector(BasisKind kind, int k) {
  if (k < 0 || k >= 5) throw std::out_of_range("symmetrized basis index must be in [0, 5)");
  const SymmetrizerT<ExactScalar> t(5);
  Vector<ExactScalar> out(5, ExactScalar(0));
  for (int j = 0; j < 5; ++j) {
    const ExactScalar& w = t.matrix()(j, k);
    if (w.is_zero()) continue;
    out = out + scale(w, basis_vector<ExactScalar>(kind, j, 5).components);
  }
  return out;
}

namespace closed_form {

EM x_tilde(const QuinticConstants& k) {
  EM x(5);
  x(1, 4) = -ExactScalar(k.s1);
  x(4, 1) = -ExactScalar(k.s1);
  x(2, 3) = -ExactScalar(k.s2);
  x(3, 2) = -ExactScalar(k.s2);
  return x;
}

EM d_tilde() {
  const ExactScalar r = sqrt2();
  return EM{{0, 0, 0, 0, -r},
            {0, 0, 0, -1, 0},
            {0, 0, 0, 1, 1},
            {0, 1, -1, 0, 0},
            {r, 0, -1, 0, 0}};
}

namespace {

// a₃₂(±s) = [[0, √2], [1, ±s₁], [±s₂ − 1, −1]]
// Upper-right block upper_factor·a₃₂(sign_upper·s), lower-left block
// lower_factor·a₃₂(sign_lower·s)ᵀ.
EM place_a32(const QuinticConstants& k, int sign_upper, int upper_factor, int sign_lower,
             int lower_factor) {
  auto a32 = [&](int sgn) {
    const RealQuintic sg(sgn);
    return std::array<std::array<ExactScalar, 2>, 3>{{
        {ExactScalar(0), sqrt2()},
        {ExactScalar(1), ExactScalar(sg * k.s1)},
        {ExactScalar(sg * k.s2 - RealQuintic(1)), ExactScalar(-1)},
    }};
  };
  const auto up = a32(sign_upper);
  const auto lo = a32(sign_lower);
  EM out(5);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) {
      const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
      out(r, 3 + c) = ExactScalar(upper_factor) * up[ur][uc];
      out(3 + c, r) = ExactScalar(lower_factor) * lo[ur][uc];
    }
  return out;
}

}  // namespace

// [[0, −a₃₂(s)], [a₃₂(−s)ᵀ, 0]]
EM a_tilde(const QuinticConstants& k) { return place_a32(k, +1, -1, -1, +1); }

// [[0, a₃₂(−s)], [−a₃₂(s)ᵀ, 0]]
EM at_tilde(const QuinticConstants& k) { return place_a32(k, -1, +1, +1, -1); }

EM n3(const QuinticConstants& k) {
  const ExactScalar r = sqrt2();
  const ExactScalar off12 = k.c1 * k.s2 - RealQuintic(1);
  return EM{{ExactScalar(2), -r * ExactScalar(k.s1), -r},
            {-r * ExactScalar(k.s1), ExactScalar(RealQuintic(3) - k.c2), off12},
            {-r, off12, ExactScalar(RealQuintic(2) * (k.s2 + RealQuintic(2)) - k.c1)}};
}

EM n2(const QuinticConstants& k) {
  const ExactScalar off = k.c1 * k.s2 + RealQuintic(1);
  return EM{{ExactScalar(RealQuintic(2) * (RealQuintic(2) - k.s2) - k.c1), off},
            {off, ExactScalar(RealQuintic(5) - k.c2)}};
}

}  // namespace closed_form

template <class S>
CheckList verify_symmetrization(int n, double tol, const QuinticConstants& k) {
  using Ops = ScalarOps<S>;
  if (Ops::exact && tol != 0.0) throw std::invalid_argument("exact verification requires tol = 0");
  const SymmetrizerT<S> t(n);
  const auto& tm = t.matrix();
  const auto eye = DenseMatrix<S>::identity(n);
  const int m = t.sym_size();
  CheckList out;

  out.push_back(matrix_check("T T^T = I", tm * tm.transpose() - eye, tol));
  out.push_back(matrix_check("T^T T = I", tm.transpose() * tm - eye, tol));
  const auto pd = build_operator<S>(OperatorKind::pd, n);
  out.push_back(matrix_check("T P_d T^T = diag(+1 x" + std::to_string(m) + ", -1 x" +
                                 std::to_string(n - m) + ")",
                             conjugate_by_t(pd, t) - parity_diagonal<S>(n), tol));

  // Reflection-even vectors have no lower part, reflection-odd no upper part.
  Vector<S> even(static_cast<std::size_t>(n), S(0)), odd(static_cast<std::size_t>(n), S(0));
  for (int i = 1; i < n; ++i) {
    const int j = n - i;
    even[static_cast<std::size_t>(i)] = S(1 + std::min(i, j));
    if (i != j) odd[static_cast<std::size_t>(i)] = S(i < j ? 1 + i : -(1 + j));
  }
  even[0] = S(7);
  const auto even_t = split_symmetrized(t.apply(even));
  const auto odd_t = split_symmetrized(t.apply(odd));
  out.push_back(vector_check("T maps P_d-even vectors to eta-type", even_t.xi, tol));
  out.push_back(vector_check("T maps P_d-odd vectors to xi-type", odd_t.eta, tol));

  // Ñ is P̃_d-block diagonal only when the operator family can be built.
  const bool family = !Ops::exact || n == 5;
  if (family) {
    const auto num = build_operator<S>(OperatorKind::number, n);
    const auto a = build_operator<S>(OperatorKind::a, n);
    const auto at = build_operator<S>(OperatorKind::at, n);
    const auto nt = conjugate_by_t(num, t);
    const auto blocks = block_split(nt, tol);
    out.push_back({"N~ off-block entries vanish", blocks.offblock_zero, blocks.offblock_max,
                   Ops::exact ? "exact" : "max-abs"});
    out.push_back(matrix_check("N~ = (T A^T T^T)(T A T^T)",
                               nt - conjugate_by_t(at, t) * conjugate_by_t(a, t), tol));
    out.push_back(scalar_check("trace(N~) = trace(N)", nt.trace() - num.trace(), tol * n));
    out.push_back(scalar_check("|N~|_F = |N|_F", frobenius_squared(nt) - frobenius_squared(num),
                               tol * n * n));
  }

  if (n == 5) {
    const auto [r14, r23] = rotation_factorization_5<S>();
    out.push_back(matrix_check("T = R14(pi/4) R23(pi/4)", tm - r14 * r23, tol));
    const ExactScalar h = ExactScalar::sqrt2() * ExactScalar(RealQuintic(Rational(1, 2)));
    const EM literal{{1, 0, 0, 0, 0},
                     {0, h, 0, 0, h},
                     {0, 0, h, h, 0},
                     {0, 0, -h, h, 0},
                     {0, -h, 0, 0, h}};
    out.push_back(matrix_check("T matches the 5x5 symmetrizer literal", tm - convert<S>(literal), tol));

    const auto x = build_operator<S>(OperatorKind::x, n);
    const auto d = build_operator<S>(OperatorKind::d, n);
    const auto a = build_operator<S>(OperatorKind::a, n);
    const auto at = build_operator<S>(OperatorKind::at, n);
    const auto num = build_operator<S>(OperatorKind::number, n);
    const auto nt = conjugate_by_t(num, t);
    out.push_back(matrix_check("X~5 closed form", conjugate_by_t(x, t) - convert<S>(closed_form::x_tilde(k)), tol));
    out.push_back(matrix_check("D~5 closed form", conjugate_by_t(d, t) - convert<S>(closed_form::d_tilde()), tol));
    out.push_back(matrix_check("A~5 partition with a32(s)", conjugate_by_t(a, t) - convert<S>(closed_form::a_tilde(k)), tol));
    out.push_back(matrix_check("A~5^T partition with a32(-s)", conjugate_by_t(at, t) - convert<S>(closed_form::at_tilde(k)), tol));
    const auto blocks = block_split(nt, tol);
    out.push_back(matrix_check("N3 block closed form", blocks.sym_block - convert<S>(closed_form::n3(k)), tol));
    out.push_back(matrix_check("N2 block closed form", blocks.anti_block - convert<S>(closed_form::n2(k)), tol));

    const auto zt = zero_count(nt, Ops::exact ? 0.0 : 1e-12);
    const auto z = zero_count(num, Ops::exact ? 0.0 : 1e-12);
    out.push_back({"N~5 has 12 zero entries", zt.zeros == 12, static_cast<double>(zt.zeros),
                   std::to_string(zt.zeros) + " zeros, " + std::to_string(zt.nonzeros) + " nonzeros"});
    out.push_back({"N5 has 25 nonzero entries", z.nonzeros == 25, static_cast<double>(z.nonzeros),
                   std::to_string(z.nonzeros) + " nonzeros"});

    // N₂ = (5 − s₂) I + (1 + c₁s₂) [[c₂, 1], [1, −c₂]]
    const ExactScalar u(RealQuintic(5) - k.s2);
    const ExactScalar w(RealQuintic(1) + k.c1 * k.s2);
    const EM reduced{{ExactScalar(k.c2), 1}, {1, ExactScalar(-k.c2)}};
    const EM rewrite = u * EM::identity(2) + w * reduced;
    out.push_back(matrix_check("N2 = (5 - s2) I + (1 + c1 s2) [[c2, 1], [1, -c2]]",
                               blocks.anti_block - convert<S>(rewrite), tol));

    // f = (a, b, c, c, b) → (a, √2b, √2c, 0, 0); f = (0, b, c, −c, −b) → −√2(0, 0, 0, c, b)
    const S sa(3), sb(5), sc(11), r2 = convert<S>(EM{{sqrt2()}})(0, 0);
    const Vector<S> fs{sa, sb, sc, sc, sb};
    const Vector<S> fa{S(0), sb, sc, -sc, -sb};
    out.push_back(vector_check("T (a,b,c,c,b) = (a, sqrt2 b, sqrt2 c, 0, 0)",
                               t.apply(fs) - Vector<S>{sa, r2 * sb, r2 * sc, S(0), S(0)}, tol));
    out.push_back(vector_check("T (0,b,c,-c,-b) = -sqrt2 (0, 0, 0, c, b)",
                               t.apply(fa) - Vector<S>{S(0), S(0), S(0), -r2 * sc, -r2 * sb}, tol));

    if constexpr (Ops::exact) {
      const auto sym = [](const auto& v) { return Vector<ExactScalar>(v); };
      const ExactScalar h2 = ExactScalar::sqrt2() * ExactScalar(RealQuintic(Rational(1, 2)));
      const std::array<Vector<ExactScalar>, 5> e_forms{
          sym(Vector<ExactScalar>{1, 0, 0, 0, 0}), scale(h2, Vector<ExactScalar>{0, 1, 0, 0, -1}),
          scale(h2, Vector<ExactScalar>{0, 0, 1, -1, 0}), scale(h2, Vector<ExactScalar>{0, 0, 1, 1, 0}),
          scale(h2, Vector<ExactScalar>{0, 1, 0, 0, 1})};
      const ExactScalar s1(k.s1), s2(k.s2), c0(RealQuintic(2)), c1(k.c1), c2(k.c2);
      const ExactScalar f = inv_sqrt10(), fi = ExactScalar::i() * inv_sqrt10();
      const ExactScalar inv5 = ScalarOps<ExactScalar>::inv_sqrt(5);
      const std::array<Vector<ExactScalar>, 5> eps_forms{
          scale(inv5, Vector<ExactScalar>{1, 1, 1, 1, 1}), scale(fi, Vector<ExactScalar>{0, s1, s2, -s2, -s1}),
          scale(fi, Vector<ExactScalar>{0, s2, -s1, s1, -s2}), scale(f, Vector<ExactScalar>{c0, c2, c1, c1, c2}),
          scale(f, Vector<ExactScalar>{c0, c1, c2, c2, c1})};
      for (int j = 0; j < 5; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        out.push_back(vector_check("e~_" + std::to_string(j) + " componentwise form",
                                   symmetrized_basis_vector(BasisKind::e, j) - e_forms[uj], 0.0));
        out.push_back(vector_check("eps~_" + std::to_string(j) + " componentwise form",
                                   symmetrized_basis_vector(BasisKind::eps, j) - eps_forms[uj], 0.0));
      }
    }
  }
  return out;
}

template class SymmetrizerT<ExactScalar>;
template class SymmetrizerT<FloatScalar>;
template DenseMatrix<ExactScalar> plane_rotation<ExactScalar>(int, int, int, const ExactScalar&, const ExactScalar&);
template DenseMatrix<FloatScalar> plane_rotation<FloatScalar>(int, int, int, const FloatScalar&, const FloatScalar&);
template std::pair<EM, EM> rotation_factorization_5<ExactScalar>();
template std::pair<DenseMatrix<FloatScalar>, DenseMatrix<FloatScalar>> rotation_factorization_5<FloatScalar>();
template BlockPair<ExactScalar> block_split<ExactScalar>(const EM&, double);
template BlockPair<FloatScalar> block_split<FloatScalar>(const DenseMatrix<FloatScalar>&, double);
template CheckList verify_symmetrization<ExactScalar>(int, double, const QuinticConstants&);
template CheckList verify_symmetrization<FloatScalar>(int, double, const QuinticConstants&);

}  // namespace dftnum
