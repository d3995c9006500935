#include <doctest.h>

#include <cmath>
#include <random>

#include "dftnum/eigensolver.hpp"
#include "dftnum/operators.hpp"
#include "dftnum/symmetrize.hpp"

using namespace dftnum;

namespace {

using FM = DenseMatrix<FloatScalar>;

FM random_hermitian(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  FM m(n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = g(rng);
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = {g(rng), g(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

// max |MV − VΛ| and max |V†V − I|.
std::pair<double, double> defects(const FM& m, const EigenDecomposition& e) {
  const int n = m.n();
  FM lambda(n);
  for (int j = 0; j < n; ++j) lambda(j, j) = e.values[static_cast<std::size_t>(j)];
  return {max_abs(m * e.vectors - e.vectors * lambda), max_abs(e.vectors.adjoint() * e.vectors - FM::identity(n))};
}

}  // namespace

TEST_CASE("2x2 example") {
  const auto e = jacobi_eigh(FM{{2.0, 1.0}, {1.0, 2.0}});
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("identity and diagonal inputs") {
  const auto e = jacobi_eigh(FM::identity(6));
  for (double v : e.values) CHECK(v == 1.0);
  CHECK(e.vectors == FM::identity(6));
  CHECK(e.sweeps_used == 0);

  FM d(4);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  d(3, 3) = 0.5;
  const auto de = jacobi_eigh(d);
  CHECK(de.values == std::vector<double>{-1.0, 0.5, 2.0, 3.0});
  CHECK(de.sweeps_used == 0);
}

TEST_CASE("random Hermitian matrices") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 9;
    const FM m = random_hermitian(n, rng);
    const auto e = jacobi_eigh(m);
    const auto [eig_defect, orth_defect] = defects(m, e);
    CHECK(eig_defect <= 1e-10 * std::max(1.0, max_abs(m)));
    CHECK(orth_defect <= 1e-12);
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    double sum = 0;
    for (double v : e.values) sum += v;
    CHECK(std::abs(sum - m.trace().real()) < 1e-10);
  }
}

TEST_CASE("degenerate clusters are re-orthonormalized") {
  // Three-fold degenerate eigenvalue hidden by a rotation.
  std::mt19937 rng(9);
  const auto q = jacobi_eigh(random_hermitian(5, rng)).vectors;
  FM d(5);
  for (int k = 0; k < 5; ++k) d(k, k) = k < 3 ? 2.0 : 5.0 + k;
  const FM m = q * d * q.adjoint();
  const auto e = jacobi_eigh(m);
  CHECK(defects(m, e).second <= 1e-12);
  CHECK(eigenvalue_clusters(e.values).size() == 3);
  CHECK(eigenvalue_clusters({1.0, 1.0 + 1e-10, 2.0}) == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(jacobi_eigh(FM{{1.0, 2.0}, {0.0, 1.0}}), NonHermitian);
  std::mt19937 rng(1);
  CHECK_THROWS_AS(jacobi_eigh(random_hermitian(12, rng), 1e-13, 1), NoConvergence);
  CHECK_THROWS_AS(cross_validate(1), std::invalid_argument);
  CHECK_THROWS_AS(cross_validate(257), std::invalid_argument);
}

TEST_CASE("residual discriminates") {
  const FM m{{2.0, 1.0}, {1.0, 2.0}};
  const double h = std::sqrt(0.5);
  const Vector<FloatScalar> v{h, h};
  CHECK(residual(m, 3.0, v) < 1e-15);
  const Vector<FloatScalar> w{h + 0.1, h};
  CHECK(residual(m, 3.0, w) > 1e-3);
}

TEST_CASE("number operator for n = 5") {
  const auto e = jacobi_eigh(build_operator<FloatScalar>(OperatorKind::number, 5));
  const std::vector<double> want{0.0, 0.54035045157464144563, 5.6554234832447442659, 6.6957175259251482508,
                                 7.1085085392554660377};
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(e.values[j] - want[j]) < 1e-10);
}

TEST_CASE("cross validation") {
  const auto r5 = cross_validate(5);
  CHECK(r5.passed());
  CHECK(r5.sym_support == 3);
  CHECK(r5.anti_support == 2);
  const auto r4 = cross_validate(4);
  CHECK(r4.passed());
  CHECK(r4.sym_support == 3);
  CHECK(r4.anti_support == 1);
  const auto r2 = cross_validate(2);
  CHECK(r2.passed());
  CHECK(r2.spectrum == std::vector<double>{0.0, 0.0});
  CHECK(r2.sym_support == 2);
}

TEST_CASE("cross validation for n in 3..64") {
  for (int n = 3; n <= 64; ++n) {
    INFO("n = " << n);
    const auto r = cross_validate(n);
    CHECK(r.passed());
    double sum = 0;
    for (double v : r.spectrum) sum += v;
    const double trace = build_operator<FloatScalar>(OperatorKind::number, n).trace().real();
    CHECK(std::abs(sum - trace) <= 1e-9 * trace);
    CHECK(r.spectrum.front() >= -1e-12);
  }
}

TEST_CASE("spectra are invariant under conjugation by T") {
  for (int n : {6, 11, 32, 64}) {
    const SymmetrizerT<FloatScalar> t(n);
    for (OperatorKind kind : {OperatorKind::x, OperatorKind::y, OperatorKind::pd, OperatorKind::number}) {
      const FM z = build_operator<FloatScalar>(kind, n);
      const auto a = jacobi_eigh(z).values;
      const auto b = jacobi_eigh(conjugate_by_t(z, t)).values;
      double diff = 0;
      for (std::size_t j = 0; j < a.size(); ++j) diff = std::max(diff, std::abs(a[j] - b[j]));
      INFO("n = " << n << ", " << to_string(kind));
      CHECK(diff < 1e-10);
    }
  }
}
