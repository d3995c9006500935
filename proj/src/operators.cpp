#include "dftnum/operators.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace dftnum {

namespace {

constexpr std::array<std::pair<std::string_view, OperatorKind>, 10> kKindNames{{
    {"dft", OperatorKind::dft},
    {"c", OperatorKind::c},
    {"j", OperatorKind::j},
    {"pd", OperatorKind::pd},
    {"x", OperatorKind::x},
    {"y", OperatorKind::y},
    {"d", OperatorKind::d},
    {"a", OperatorKind::a},
    {"at", OperatorKind::at},
    {"number", OperatorKind::number},
}};

int mod(long k, int n) { return static_cast<int>(((k % n) + n) % n); }

template <class S>
DenseMatrix<S> shift(int n) {
  DenseMatrix<S> c(n);
  for (int k = 0; k < n; ++k) c(k, mod(k + 1, n)) = S(1);
  return c;
}

template <class S>
DenseMatrix<S> backward_identity(int n) {
  DenseMatrix<S> j(n);
  for (int k = 0; k < n; ++k) j(k, n - 1 - k) = S(1);
  return j;
}

template <class S>
DenseMatrix<S> position(int n) {
  DenseMatrix<S> x(n);
  for (int k = 0; k < n; ++k) x(k, k) = ScalarOps<S>::two_sin(k, n);
  return x;
}

template <class S>
DenseMatrix<S> difference(int n) {
  DenseMatrix<S> c = shift<S>(n);
  return c - c.transpose();
}

template <class S>
DenseMatrix<S> fourier(int n) {
  using Ops = ScalarOps<S>;
  const S norm = Ops::inv_sqrt(n);
  DenseMatrix<S> phi(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) phi(k, l) = norm * Ops::root_of_unity(static_cast<long>(k) * l, n);
  return phi;
}

template <class S>
Check residual_check(std::string name, const DenseMatrix<S>& residual, double tol) {
  double r = max_abs(residual);
  bool ok = ScalarOps<S>::exact ? all_zero(residual, 0.0) : r <= tol;
  return {std::move(name), ok, r, ScalarOps<S>::exact ? "exact" : "max-abs"};
}

}  // namespace

OperatorKind parse_operator_kind(std::string_view name) {
  for (const auto& [text, kind] : kKindNames)
    if (text == name) return kind;
  throw std::invalid_argument("unknown operator kind: " + std::string(name));
}

std::string to_string(OperatorKind kind) {
  for (const auto& [text, k] : kKindNames)
    if (k == kind) return std::string(text);
  return "?";
}

template <class S>
DenseMatrix<S> build_operator(OperatorKind kind, int n) {
  if (n < 2) throw std::invalid_argument("operator dimension must be at least 2");
  switch (kind) {
    case OperatorKind::dft: return fourier<S>(n);
    case OperatorKind::c: return shift<S>(n);
    case OperatorKind::j: return backward_identity<S>(n);
    case OperatorKind::pd: return shift<S>(n).transpose() * backward_identity<S>(n);
    case OperatorKind::x: return position<S>(n);
    case OperatorKind::y: {
      DenseMatrix<S> c = shift<S>(n);
      return ScalarOps<S>::i() * (c.transpose() - c);
    }
    case OperatorKind::d: return difference<S>(n);
    case OperatorKind::a: return position<S>(n) + difference<S>(n);
    case OperatorKind::at: return position<S>(n) - difference<S>(n);
    case OperatorKind::number: {
      // AᵀA = (X − D)(X + D) expanded: every float entry is then a single
      // product or an integer sum, so P_d-symmetry survives rounding.
      const DenseMatrix<S> x = position<S>(n);
      const DenseMatrix<S> d = difference<S>(n);
      return (x * x - d * d) + (x * d - d * x);
    }
  }
  throw std::invalid_argument("unknown operator kind");
}

template <class S>
BasisVector<S> basis_vector(BasisKind kind, int k, int n) {
  if (n < 1 || k < 0 || k >= n)
    throw std::out_of_range("basis index " + std::to_string(k) + " out of range for n = " +
                            std::to_string(n));
  Vector<S> v(static_cast<std::size_t>(n), S(0));
  if (kind == BasisKind::e) {
    v[static_cast<std::size_t>(k)] = S(1);
  } else {
    const S norm = ScalarOps<S>::inv_sqrt(n);
    for (int l = 0; l < n; ++l)
      v[static_cast<std::size_t>(l)] = norm * ScalarOps<S>::root_of_unity(static_cast<long>(k) * l, n);
  }
  return {kind, k, std::move(v)};
}

template <class S>
CheckList verify_relations(int n, double tol) {
  using Ops = ScalarOps<S>;
  if (Ops::exact && tol != 0.0) throw std::invalid_argument("exact verification requires tol = 0");
  const S i = Ops::i();
  const auto phi = build_operator<S>(OperatorKind::dft, n);
  const auto pd = build_operator<S>(OperatorKind::pd, n);
  const auto x = build_operator<S>(OperatorKind::x, n);
  const auto y = build_operator<S>(OperatorKind::y, n);
  const auto d = build_operator<S>(OperatorKind::d, n);
  const auto a = build_operator<S>(OperatorKind::a, n);
  const auto at = build_operator<S>(OperatorKind::at, n);
  const auto num = build_operator<S>(OperatorKind::number, n);
  const auto eye = DenseMatrix<S>::identity(n);
  const auto phi_dag = phi.adjoint();

  CheckList out;
  out.push_back(residual_check("phi unitary: Phi Phi^+ = I", phi * phi_dag - eye, tol));
  out.push_back(residual_check("phi symmetric: Phi = Phi^T", phi - phi.transpose(), tol));
  out.push_back(residual_check("[Phi, P_d] = 0", commutator(phi, pd), tol));
  out.push_back(residual_check("[N, Phi] = 0", commutator(num, phi), tol));
  out.push_back(residual_check("A Phi = i Phi A", a * phi - i * (phi * a), tol));
  out.push_back(residual_check("A^T Phi = -i Phi A^T", at * phi + i * (phi * at), tol));
  out.push_back(residual_check("A^T is the transpose of A", at - a.transpose(), tol));
  out.push_back(residual_check("A = X + iY = X + D", a - (x + i * y), tol));
  out.push_back(residual_check("Y = -iD", y + i * d, tol));
  out.push_back(residual_check("Y = Phi X Phi^+", y - phi * x * phi_dag, tol));
  out.push_back(residual_check("N = A^T A", num - at * a, tol));

  // Two-diagonal actions and the reflection, collected over all n basis vectors.
  DenseMatrix<S> x_on_eps(n), y_on_e(n), pd_on_e(n), pd_on_eps(n), aw(n);
  for (int k = 0; k < n; ++k) {
    auto e = [&](int m) { return basis_vector<S>(BasisKind::e, mod(m, n), n).components; };
    auto eps = [&](int m) { return basis_vector<S>(BasisKind::eps, mod(m, n), n).components; };
    Vector<S> r1 = x * eps(k) - scale(i, eps(k - 1) - eps(k + 1));
    Vector<S> r2 = y * e(k) - scale(i, e(k + 1) - e(k - 1));
    Vector<S> r3 = pd * e(k) - e(n - k);
    Vector<S> r4 = pd * eps(k) - eps(n - k);
    for (int r = 0; r < n; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      x_on_eps(k, r) = r1[ur];
      y_on_e(k, r) = r2[ur];
      pd_on_e(k, r) = r3[ur];
      pd_on_eps(k, r) = r4[ur];
    }
    // Spectrum of X in Askey-Wilson form: 2 sin(2πk/n) = i(q^{-k} − q^k).
    aw(k, k) = x(k, k) - i * (Ops::root_of_unity(-k, n) - Ops::root_of_unity(k, n));
  }
  out.push_back(residual_check("X eps_k = i(eps_{k-1} - eps_{k+1})", x_on_eps, tol));
  out.push_back(residual_check("Y e_k = i(e_{k+1} - e_{k-1})", y_on_e, tol));
  out.push_back(residual_check("P_d e_k = e_{n-k}", pd_on_e, tol));
  out.push_back(residual_check("P_d eps_k = eps_{n-k}", pd_on_eps, tol));
  out.push_back(residual_check("X spectrum = i(q^{-k} - q^k)", aw, tol));
  return out;
}

template DenseMatrix<ExactScalar> build_operator<ExactScalar>(OperatorKind, int);
template DenseMatrix<FloatScalar> build_operator<FloatScalar>(OperatorKind, int);
template BasisVector<ExactScalar> basis_vector<ExactScalar>(BasisKind, int, int);
template BasisVector<FloatScalar> basis_vector<FloatScalar>(BasisKind, int, int);
template CheckList verify_relations<ExactScalar>(int, double);
template CheckList verify_relations<FloatScalar>(int, double);

}  // namespace dftnum
