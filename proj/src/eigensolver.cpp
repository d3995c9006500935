#include "dftnum/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dftnum/operators.hpp"
#include "dftnum/symmetrize.hpp"

namespace dftnum {

namespace {

using CM = DenseMatrix<FloatScalar>;

double frobenius(const CM& m) {
  double s = 0.0;
  for (const FloatScalar& v : m.data()) s += std::norm(v);
  return std::sqrt(s);
}

double off_diagonal(const CM& m) {
  double s = 0.0;
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// Zeroes a(p, q) with W = diag(1, e^{-iφ})·[[c, s], [−s, c]] where
// a(p, q) = |a(p, q)| e^{iφ}; then A ← W†AW and V ← VW.
void rotate(CM& a, CM& v, int p, int q) {
  const FloatScalar apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const FloatScalar phase = apq / mag;  // e^{iφ}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const FloatScalar e = std::conj(phase);  // e^{-iφ}
  const int n = a.n();

  for (int k = 0; k < n; ++k) {
    const FloatScalar akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * e * akq;
    a(k, q) = s * akp + c * e * akq;
  }
  for (int k = 0; k < n; ++k) {
    const FloatScalar apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * std::conj(e) * aqk;
    a(q, k) = s * apk + c * std::conj(e) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (int k = 0; k < n; ++k) {
    const FloatScalar vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * e * vkq;
    v(k, q) = s * vkp + c * e * vkq;
  }
}

// Modified Gram-Schmidt on columns [lo, hi) of v.
void orthonormalize(CM& v, int lo, int hi) {
  const int n = v.n();
  for (int j = lo; j < hi; ++j) {
    for (int i = lo; i < j; ++i) {
      FloatScalar proj = 0.0;
      for (int k = 0; k < n; ++k) proj += std::conj(v(k, i)) * v(k, j);
      for (int k = 0; k < n; ++k) v(k, j) -= proj * v(k, i);
    }
    double norm = 0.0;
    for (int k = 0; k < n; ++k) norm += std::norm(v(k, j));
    norm = std::sqrt(norm);
    for (int k = 0; k < n; ++k) v(k, j) /= norm;
  }
}

Vector<FloatScalar> column(const CM& m, int j) {
  Vector<FloatScalar> out(static_cast<std::size_t>(m.n()));
  for (int k = 0; k < m.n(); ++k) out[static_cast<std::size_t>(k)] = m(k, j);
  return out;
}

}  // namespace

Vector<FloatScalar> EigenDecomposition::vector(int j) const { return column(vectors, j); }

EigenDecomposition jacobi_eigh(const DenseMatrix<FloatScalar>& m, double tol, int max_sweeps) {
  const int n = m.n();
  const double hermitian_defect = max_abs(m - m.adjoint());
  if (hermitian_defect > 1e-12)
    throw NonHermitian("jacobi_eigh: matrix is not Hermitian (defect " +
                       std::to_string(hermitian_defect) + ")");

  CM a = m;
  CM v = CM::identity(n);
  const double target = tol * frobenius(m);
  int sweeps = 0;
  double off = off_diagonal(a);
  while (off > target) {
    if (sweeps == max_sweeps)
      throw NoConvergence("jacobi_eigh: no convergence after " + std::to_string(max_sweeps) +
                          " sweeps (off-diagonal " + std::to_string(off) + ")");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
    off = off_diagonal(a);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors = CM(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    out.values.push_back(a(src, src).real());
    for (int k = 0; k < n; ++k) out.vectors(k, j) = v(k, src);
  }
  for (const auto& [lo, hi] : eigenvalue_clusters(out.values))
    if (hi - lo > 1) orthonormalize(out.vectors, lo, hi);
  out.sweeps_used = sweeps;
  out.offdiag_final = off;
  return out;
}

double residual(const DenseMatrix<FloatScalar>& m, double value, const Vector<FloatScalar>& v) {
  const Vector<FloatScalar> mv = m * v;
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(mv[i] - value * v[i]));
  return r / std::max(1.0, max_abs(v));
}

std::vector<std::pair<int, int>> eigenvalue_clusters(const std::vector<double>& values, double gap) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(values.size());
  int lo = 0;
  for (int j = 1; j <= n; ++j) {
    if (j == n || values[static_cast<std::size_t>(j)] - values[static_cast<std::size_t>(j - 1)] >= gap) {
      out.emplace_back(lo, j);
      lo = j;
    }
  }
  return out;
}

ValidationReport cross_validate(int n) {
  if (n < 2 || n > 256) throw std::invalid_argument("cross_validate: n must lie in [2, 256]");
  ValidationReport rep;
  rep.n = n;
  const auto num = build_operator<FloatScalar>(OperatorKind::number, n);
  const SymmetrizerT<FloatScalar> t(n);
  const auto nt = conjugate_by_t(num, t);
  const auto plain = jacobi_eigh(num);
  auto tilde = jacobi_eigh(nt);
  rep.spectrum = plain.values;
  rep.spectrum_tilde = tilde.values;

  double spec_diff = 0.0, min_value = 0.0, sum = 0.0;
  for (std::size_t j = 0; j < plain.values.size(); ++j) {
    spec_diff = std::max(spec_diff, std::abs(plain.values[j] - tilde.values[j]));
    min_value = std::min(min_value, plain.values[j]);
    sum += plain.values[j];
  }
  const double trace = num.trace().real();
  rep.checks.push_back({"spectra of N and T N T^T agree", spec_diff <= 1e-10, spec_diff, "max-abs"});
  rep.checks.push_back({"N is positive semidefinite", min_value >= -1e-12, min_value, "min eigenvalue"});
  const double trace_rel = std::abs(sum - trace) / std::max(1.0, std::abs(trace));
  rep.checks.push_back({"sum of eigenvalues = trace(N)", trace_rel <= 1e-9, trace_rel, "relative"});

  // Within each cluster rotate the eigenvectors onto the eigenbasis of the
  // projector onto the symmetric block, then each vector should sit on
  // exactly one block.
  const int m = t.sym_size();
  double leak = 0.0;
  for (const auto& [lo, hi] : eigenvalue_clusters(tilde.values)) {
    const int k = hi - lo;
    if (k > 1) {
      CM proj(k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          FloatScalar s = 0.0;
          for (int r = 0; r < m; ++r) s += std::conj(tilde.vectors(r, lo + i)) * tilde.vectors(r, lo + j);
          proj(i, j) = s;
        }
      const auto rot = jacobi_eigh(proj);
      CM mixed(n);
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < k; ++j) {
          FloatScalar s = 0.0;
          for (int i = 0; i < k; ++i) s += tilde.vectors(r, lo + i) * rot.vectors(i, j);
          mixed(r, j) = s;
        }
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < k; ++j) tilde.vectors(r, lo + j) = mixed(r, j);
    }
    for (int j = lo; j < hi; ++j) {
      double upper = 0.0, lower = 0.0;
      for (int r = 0; r < n; ++r) {
        double& side = r < m ? upper : lower;
        side = std::max(side, std::abs(tilde.vectors(r, j)));
      }
      if (upper >= lower) {
        ++rep.sym_support;
        leak = std::max(leak, lower);
      } else {
        ++rep.anti_support;
        leak = std::max(leak, upper);
      }
    }
  }
  rep.checks.push_back({"eigenvectors of T N T^T live on one parity block", leak < 1e-9, leak,
                        "sym " + std::to_string(rep.sym_support) + ", anti " +
                            std::to_string(rep.anti_support)});
  const bool sizes = rep.sym_support == m && rep.anti_support == n - m;
  rep.checks.push_back({"block supports match (n/2+1, rest)", sizes, 0.0,
                        std::to_string(rep.sym_support) + "/" + std::to_string(rep.anti_support)});
  return rep;
}

}  // namespace dftnum
