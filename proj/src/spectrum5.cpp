#include "dftnum/spectrum5.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "dftnum/eigensolver.hpp"
#include "dftnum/operators.hpp"
#include "dftnum/symmetrize.hpp"

namespace dftnum {

namespace {

using RQ = RealQuintic;

ExactScalar ex(const RQ& x) { return ExactScalar(x); }

std::optional<RQ> real_in_k(const ExactScalar& x) {
  if (!x.in_k() || !x.is_real()) return std::nullopt;
  return x.k().re();
}

Check exact_check(std::string name, const ExactScalar& diff) {
  return {std::move(name), diff.is_zero(), ScalarOps<ExactScalar>::magnitude(diff), "exact"};
}

Check exact_vector_check(std::string name, const ExactVector& diff) {
  return {std::move(name), all_zero(diff, 0.0), max_abs(diff), "exact"};
}

// Ñ₅ = T𝒩₅Tᵀ built from the operator definitions, independent of any
// closed form.
ExactMatrix n5_tilde() {
  const auto num = build_operator<ExactScalar>(OperatorKind::number, 5);
  return conjugate_by_t(num, SymmetrizerT<ExactScalar>(5));
}

ExactVector pad(const ExactVector& phi, Block block) {
  ExactVector out(5, ExactScalar(0));
  const std::size_t offset = block == Block::sym ? 0 : 3;
  for (std::size_t i = 0; i < phi.size(); ++i) out[offset + i] = phi[i];
  return out;
}

}  // namespace

TwoByTwoSplit split_2x2(const ExactMatrix& m) {
  if (m.n() != 2) throw DimensionMismatch("split_2x2 expects a 2x2 matrix");
  if (!(m(0, 1) == m(1, 0))) throw NonSymmetric("split_2x2 expects a symmetric matrix");
  const ExactScalar half(RQ(Rational(1, 2)));
  TwoByTwoSplit s;
  s.u = half * (m(0, 0) + m(1, 1));
  s.v = half * (m(0, 0) - m(1, 1));
  s.b = m(0, 1);
  s.mprime = ExactMatrix{{s.v, s.b}, {s.b, -s.v}};
  return s;
}

Eigen2 eig_2x2_closed(const ExactMatrix& m) {
  const TwoByTwoSplit s = split_2x2(m);
  auto disc = real_in_k(s.v * s.v + s.b * s.b);
  if (!disc) throw NotASquare("v^2 + b^2 does not lie in K");
  auto root = disc->sqrt_exact();
  if (!root) throw NotASquare("v^2 + b^2 is not a square in K");
  return {s.u + ex(*root), s.u - ex(*root)};
}

std::array<double, 2> eig_2x2_float(const DenseMatrix<FloatScalar>& m) {
  if (m.n() != 2) throw DimensionMismatch("eig_2x2_float expects a 2x2 matrix");
  const double u = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double v = 0.5 * (m(0, 0).real() - m(1, 1).real());
  const double r = std::sqrt(v * v + std::norm(m(0, 1)));
  return {u + r, u - r};
}

template <class S>
CharPolyCoeffs<S> char_poly_coeffs(const DenseMatrix<S>& m) {
  const int k = m.n();
  if (k != 2 && k != 3) throw std::invalid_argument("char_poly_coeffs supports 2x2 and 3x3 only");
  auto minor2 = [&](int i, int j) { return m(i, i) * m(j, j) - m(i, j) * m(j, i); };
  CharPolyCoeffs<S> out;
  out.coeffs.push_back(-m.trace());
  if (k == 2) {
    out.coeffs.push_back(minor2(0, 1));
    return out;
  }
  out.coeffs.push_back(minor2(0, 1) + minor2(0, 2) + minor2(1, 2));
  const S det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  out.coeffs.push_back(-det);
  return out;
}

template CharPolyCoeffs<ExactScalar> char_poly_coeffs<ExactScalar>(const ExactMatrix&);
template CharPolyCoeffs<FloatScalar> char_poly_coeffs<FloatScalar>(const DenseMatrix<FloatScalar>&);

std::array<LabeledEigenpair, 2> n2_closed_spectrum(const QuinticConstants& k) {
  const RQ one(1);
  return {{
      {"mu1", ex(RQ(5) + k.s2 * (k.s2 + k.c1)), ExactVector{ex(k.c1), ex(one + k.s2)}, Block::anti, {}},
      {"mu2", ex(k.s1 * (k.s1 + k.c2)), ExactVector{ex(one + k.s2), ex(-k.c1)}, Block::anti, {}},
  }};
}

std::array<LabeledEigenpair, 3> n3_closed_spectrum(const QuinticConstants& k) {
  const ExactScalar r2 = ExactScalar::sqrt2();
  const RQ one(1), two(2);
  return {{
      {"lambda0", ExactScalar(0), ExactVector{ex(k.s1 - two * k.c2), r2 * ex(one + k.s2), r2}, Block::sym, {}},
      {"lambda1", ex(RQ(5) + k.s2 * (k.s2 - k.c1)),
       ExactVector{r2 * ex(k.c1), ex(-(two * k.s2) - one), ex(two * (k.s2 - k.c1) + RQ(3))}, Block::sym, {}},
      {"lambda2", ex(k.s1 * (k.s1 - k.c2)), ExactVector{-(r2 * ex(k.c1)), ExactScalar(1), ExactScalar(1)},
       Block::sym, {}},
  }};
}

int dft_phase(const ExactVector& f) {
  const auto phi = build_operator<ExactScalar>(OperatorKind::dft, 5);
  const ExactVector pf = phi * f;
  ExactScalar ik(1);
  for (int k = 0; k < 4; ++k) {
    if (all_zero(pf - scale(ik, f), 0.0)) return k;
    ik *= ExactScalar::i();
  }
  throw NoPhaseFound("vector is not an eigenvector of the 5x5 DFT");
}

std::vector<DftEigenvector> assemble_dft_eigenvectors(const QuinticConstants& k) {
  const auto n3 = n3_closed_spectrum(k);
  const auto n2 = n2_closed_spectrum(k);
  const SymmetrizerT<ExactScalar> t(5);
  // f0 ← λ₀, f1 ← μ₁, f2 ← λ₂, f3 ← μ₂, f4 ← λ₁
  const std::array<std::pair<std::string, LabeledEigenpair>, 5> order{{
      {"f0", n3[0]}, {"f1", n2[0]}, {"f2", n3[2]}, {"f3", n2[1]}, {"f4", n3[1]},
  }};
  std::vector<DftEigenvector> out;
  for (const auto& [name, pair] : order) {
    DftEigenvector v{name, pair, pad(pair.vector, pair.block), {}};
    v.f = t.unapply(v.f_tilde);
    try {
      v.pair.dft_phase = dft_phase(v.f);
    } catch (const NoPhaseFound&) {
      v.pair.dft_phase.reset();
    }
    out.push_back(std::move(v));
  }
  return out;
}

CheckList verify_spectrum5(const QuinticConstants& k) {
  CheckList out;
  const RQ one(1), two(2), five(5);
  const ExactMatrix nt = n5_tilde();
  const auto blocks = block_split(nt);
  const ExactMatrix& n3 = blocks.sym_block;
  const ExactMatrix& n2 = blocks.anti_block;

  // 𝒩₂ via the 2×2 splitting.
  const TwoByTwoSplit sp = split_2x2(n2);
  const ExactScalar b = ex(k.c1 * k.s2 + one);
  out.push_back(exact_check("N2 split: u = 5 - s2", sp.u - ex(five - k.s2)));
  out.push_back(exact_check("N2 split: v = c2 - s2", sp.v - ex(k.c2 - k.s2)));
  out.push_back(exact_check("N2 split: b = c1 s2 + 1", sp.b - b));
  out.push_back(exact_check("v = c2 b", sp.v - ex(k.c2) * b));
  out.push_back(exact_check("v^2 + b^2 = s1^2 b^2", sp.v * sp.v + sp.b * sp.b - ex(k.s1 * k.s1) * b * b));
  out.push_back(exact_check("v^2 + b^2 = 2 sqrt5 (s2 + 2 c1)",
                            sp.v * sp.v + sp.b * sp.b - ex(two * k.sqrt5 * (k.s2 + two * k.c1))));

  const auto pairs2 = n2_closed_spectrum(k);
  try {
    const Eigen2 e2 = eig_2x2_closed(n2);
    out.push_back(exact_check("mu1 = u + sqrt(v^2 + b^2) = 5 + s2(s2 + c1)", e2.mu1 - pairs2[0].value));
    out.push_back(exact_check("mu2 = u - sqrt(v^2 + b^2) = s1(s1 + c2)", e2.mu2 - pairs2[1].value));
  } catch (const NotASquare& e) {
    out.push_back({"mu1, mu2 from the 2x2 splitting", false, 0.0, e.what()});
  }
  out.push_back(exact_check("mu1 = 5 - s2 + s1 b", pairs2[0].value - (ex(five - k.s2) + ex(k.s1) * b)));
  out.push_back(exact_check("mu2 = 5 - s2 - s1 b", pairs2[1].value - (ex(five - k.s2) - ex(k.s1) * b)));

  const ExactMatrix reduced{{ex(k.c2), 1}, {1, ex(-k.c2)}};
  out.push_back(exact_vector_check("[[c2,1],[1,-c2]] (c1, 1+s2) = s1 (c1, 1+s2)",
                                   reduced * pairs2[0].vector - scale(ex(k.s1), pairs2[0].vector)));
  out.push_back(exact_vector_check("[[c2,1],[1,-c2]] (1+s2, -c1) = -s1 (1+s2, -c1)",
                                   reduced * pairs2[1].vector + scale(ex(k.s1), pairs2[1].vector)));
  for (const auto& p : pairs2)
    out.push_back(exact_vector_check("N2 phi = " + p.label + " phi", n2 * p.vector - scale(p.value, p.vector)));
  out.push_back(exact_check("N2 eigenvectors orthogonal", inner(pairs2[0].vector, pairs2[1].vector)));

  // 𝒩₃ via its characteristic polynomial.
  const auto cp = char_poly_coeffs(n3);
  out.push_back(exact_check("det N3 = 0", cp.coeffs[2]));
  out.push_back(exact_check("c1 = -trace N3 = -2(5 + s2)", cp.coeffs[0] + ex(two * (five + k.s2))));
  out.push_back(exact_check("c2 = 10 + (4 s2 + 3) s1^2",
                            cp.coeffs[1] - ex(RQ(10) + (RQ(4) * k.s2 + RQ(3)) * k.s1 * k.s1)));
  const auto pairs3 = n3_closed_spectrum(k);
  const ExactScalar plus_form = ex(five + k.s2 + (k.c1 * k.s2 - one) * k.s1);
  const ExactScalar minus_form = ex(five + k.s2 - (k.c1 * k.s2 - one) * k.s1);
  out.push_back(exact_check("lambda1 = 5 + s2 + (c1 s2 - 1) s1", pairs3[1].value - plus_form));
  out.push_back(exact_check("lambda2 = 5 + s2 - (c1 s2 - 1) s1", pairs3[2].value - minus_form));
  {
    const ExactScalar quarter(RQ(Rational(1, 4)));
    const ExactScalar half(RQ(Rational(1, 2)));
    const ExactScalar c1 = cp.coeffs[0], c2 = cp.coeffs[1];
    auto disc = real_in_k(quarter * c1 * c1 - c2);
    std::optional<RQ> root = disc ? disc->sqrt_exact() : std::nullopt;
    if (root) {
      out.push_back(exact_check("-c1/2 - sqrt(c1^2/4 - c2) = lambda1", -(half * c1) - ex(*root) - pairs3[1].value));
      out.push_back(exact_check("-c1/2 + sqrt(c1^2/4 - c2) = lambda2", -(half * c1) + ex(*root) - pairs3[2].value));
    } else {
      out.push_back({"quadratic roots of N3 lie in K", false, 0.0, "discriminant is not a square in K"});
    }
  }
  {
    // Second row minus s₁ times the third row of 𝒩₃ − λ₁I eliminates x₀.
    const ExactMatrix shifted = n3 - pairs3[1].value * ExactMatrix::identity(3);
    const ExactScalar s1 = ex(k.s1);
    const ExactScalar a_row = shifted(1, 1) - s1 * shifted(2, 1);
    const ExactScalar b_row = shifted(1, 2) - s1 * shifted(2, 2);
    const ExactScalar x0_row = shifted(1, 0) - s1 * shifted(2, 0);
    const ExactScalar a_form = ex(k.sqrt5 * k.s2 + RQ(3) * k.c1 - five);
    const ExactScalar b_form = ex((RQ(4) - k.c1) * k.s1 + RQ(3) * k.c2 - two);
    const ExactScalar eps = ex(-(k.c2 * (k.c2 * k.s1 + RQ(3))));
    out.push_back(exact_check("row elimination removes x0", x0_row));
    out.push_back(exact_check("a = sqrt5 s2 + 3 c1 - 5", a_row - a_form));
    out.push_back(exact_check("b = (4 - c1) s1 + 3 c2 - 2", b_row - b_form));
    out.push_back(exact_check("a = eps (2 s2 - 2 c1 + 3)", a_form - eps * ex(two * k.s2 - two * k.c1 + RQ(3))));
    out.push_back(exact_check("b = eps (2 s2 + 1)", b_form - eps * ex(two * k.s2 + one)));
  }
  for (const auto& p : pairs3)
    out.push_back(exact_vector_check("N3 phi = " + p.label + " phi", n3 * p.vector - scale(p.value, p.vector)));

  // The full five-dimensional picture.
  const auto num = build_operator<ExactScalar>(OperatorKind::number, 5);
  const auto pd = build_operator<ExactScalar>(OperatorKind::pd, 5);
  std::vector<ExactScalar> values;
  for (const auto& p : pairs3) values.push_back(p.value);
  for (const auto& p : pairs2) values.push_back(p.value);
  ExactScalar total(0);
  for (const auto& v : values) total += v;
  out.push_back(exact_check("sum of eigenvalues = trace(N5) = 20", total - num.trace()));
  out.push_back(exact_check("trace(N5) = 20", num.trace() - ExactScalar(20)));
  bool simple = true;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) simple = simple && !(values[i] - values[j]).is_zero();
  out.push_back({"spectrum is simple", simple, 0.0, "pairwise exact differences"});

  {
    const auto jac = jacobi_eigh(to_float(nt));
    std::vector<double> closed;
    for (const auto& v : values) closed.push_back(v.to_complex().real());
    std::sort(closed.begin(), closed.end());
    double diff = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) diff = std::max(diff, std::abs(closed[i] - jac.values[i]));
    out.push_back({"closed forms match Jacobi on N~5", diff <= 1e-10, diff, "max-abs, tol 1e-10"});
  }

  const auto fs = assemble_dft_eigenvectors(k);
  std::multiset<int> phases;
  int sym = 0, anti = 0;
  for (const auto& f : fs) {
    out.push_back(exact_vector_check("N5 " + f.name + " = " + f.pair.label + " " + f.name,
                                     num * f.f - scale(f.pair.value, f.f)));
    const int parity = f.pair.block == Block::sym ? 1 : -1;
    out.push_back(exact_vector_check("P_d " + f.name + " = " + std::string(parity > 0 ? "+" : "-") + f.name,
                                     pd * f.f - scale(ExactScalar(parity), f.f)));
    (parity > 0 ? sym : anti) += 1;
    if (f.pair.dft_phase) phases.insert(*f.pair.dft_phase);
    out.push_back({"Phi5 " + f.name + " = i^k " + f.name, f.pair.dft_phase.has_value(),
                   0.0, f.pair.dft_phase ? "k = " + std::to_string(*f.pair.dft_phase) : "no phase"});
  }
  bool orthogonal = true;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) orthogonal = orthogonal && inner(fs[i].f, fs[j].f).is_zero();
  out.push_back({"assembled eigenvectors pairwise orthogonal", orthogonal, 0.0, "exact"});
  const std::multiset<int> expected{0, 0, 1, 2, 3};
  out.push_back({"DFT phase multiset {1, 1, -1, i, -i}", phases == expected, 0.0, ""});
  out.push_back({"parity split 3 symmetric / 2 antisymmetric", sym == 3 && anti == 2, 0.0,
                 std::to_string(sym) + "/" + std::to_string(anti)});
  return out;
}

}  // namespace dftnum
