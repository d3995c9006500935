#include "dftnum/commands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dftnum/eigensolver.hpp"
#include "dftnum/identities.hpp"
#include "dftnum/spectrum5.hpp"
#include "dftnum/symmetrize.hpp"

namespace dftnum {

namespace {

const char* const kPhaseNames[] = {"1", "i", "-1", "-i"};

double clean(double v) { return v == 0.0 ? 0.0 : v; }

// "p/q" when x is rational, the coordinate form otherwise.
Json scalar_json(const ExactScalar& x) {
  if (x.in_k() && x.k().im().is_zero() && x.k().re().is_rational())
    return x.k().re().coords()[0].to_string();
  return to_json(x);
}

Json doubles(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(clean(x));
  return out;
}

Json normalized(const ExactVector& f) {
  Vector<FloatScalar> v = to_float(f);
  double norm = 0.0;
  for (const FloatScalar& x : v) norm += std::norm(x);
  norm = std::sqrt(norm);
  for (FloatScalar& x : v) x /= norm;
  return to_json(v);
}

bool is_eigenvector(const ExactMatrix& m, const ExactScalar& value, const ExactVector& v) {
  return all_zero(m * v - scale(value, v), 0.0);
}

bool all_real(const ExactVector& v) {
  return std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x.is_real(); });
}

bool all_imaginary(const ExactVector& v) {
  return std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x.conj() == -x; });
}

void add_prefixed(CheckList& to, CheckList from, const std::string& prefix) {
  for (Check& c : from) c.name = prefix + ": " + c.name;
  append(to, std::move(from));
}

Json number_pairs(const DenseMatrix<FloatScalar>& fm, const EigenDecomposition& oracle) {
  auto vecs = assemble_dft_eigenvectors();
  std::stable_sort(vecs.begin(), vecs.end(), [](const DftEigenvector& a, const DftEigenvector& b) {
    return a.pair.value.to_complex().real() < b.pair.value.to_complex().real();
  });
  Json out = Json::array();
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    const DftEigenvector& e = vecs[j];
    const double value = e.pair.value.to_complex().real();
    const int phase = e.pair.dft_phase.value_or(0);
    out.push_back({{"label", e.pair.label},
                   {"eigenvector", e.name},
                   {"block", to_string(e.pair.block)},
                   {"value", to_json(e.pair.value)},
                   {"value_float", value},
                   {"oracle_value", clean(oracle.values[j])},
                   {"dft_phase", phase},
                   {"dft_eigenvalue", kPhaseNames[phase]},
                   {"vector", to_json(e.f)},
                   {"residual", residual(fm, value, to_float(e.f))}});
  }
  return out;
}

Json position_pairs(OperatorKind kind) {
  static const char* const labels[] = {"0", "s1", "s2", "-s2", "-s1"};
  const auto x = build_operator<ExactScalar>(OperatorKind::x, 5);
  const BasisKind basis = kind == OperatorKind::x ? BasisKind::e : BasisKind::eps;
  std::vector<int> order{0, 1, 2, 3, 4};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x(a, a).to_complex().real() < x(b, b).to_complex().real();
  });
  Json out = Json::array();
  for (int k : order) {
    const auto v = basis_vector<ExactScalar>(basis, k, 5);
    out.push_back({{"label", labels[k]},
                   {"value", to_json(x(k, k))},
                   {"value_float", clean(x(k, k).to_complex().real())},
                   {"eigenvector", v.label()},
                   {"vector", to_json(v.components)}});
  }
  return out;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "relations") return Suite::relations;
  if (name == "symmetrization") return Suite::symmetrization;
  if (name == "spectrum5") return Suite::spectrum5;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::relations: return "relations";
    case Suite::symmetrization: return "symmetrization";
    case Suite::spectrum5: return "spectrum5";
    case Suite::all: return "all";
  }
  return "";
}

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

RunReport run_verify(int n, Suite suite, Backend backend, double tol, const std::optional<std::string>& flip) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (suite == Suite::spectrum5 && n != 5) throw std::invalid_argument("suite spectrum5 requires n = 5");
  if (tol < 0.0) throw std::invalid_argument("tol must be nonnegative");
  const QuinticConstants k =
      flip ? QuinticConstants::standard().with_flipped(*flip) : QuinticConstants::standard();
  const bool exact = backend == Backend::exact;

  RunReport r{"verify", n, backend, to_string(suite), {}};
  if (suite == Suite::relations || suite == Suite::all)
    add_prefixed(r.checks, exact ? verify_relations<ExactScalar>(n, 0.0) : verify_relations<FloatScalar>(n, tol),
                 "relations");
  if (suite == Suite::symmetrization || suite == Suite::all)
    add_prefixed(r.checks,
                 exact ? verify_symmetrization<ExactScalar>(n, 0.0, k)
                       : verify_symmetrization<FloatScalar>(n, tol, k),
                 "symmetrization");
  if ((suite == Suite::spectrum5 || suite == Suite::all) && n == 5) {
    add_prefixed(r.checks, field_identities(k), "field");
    add_prefixed(r.checks, verify_spectrum5(k), "spectrum5");
  }
  if (suite == Suite::all && n <= 256) add_prefixed(r.checks, cross_validate(n).checks, "jacobi");
  return r;
}

Json to_json(const RunReport& r) {
  Json checks = Json::array();
  int failed = 0;
  for (const Check& c : r.checks) {
    failed += c.passed ? 0 : 1;
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"residual", clean(c.residual)},
                      {"detail", c.detail}});
  }
  return {{"command", r.command},
          {"n", r.n},
          {"backend", to_string(r.backend)},
          {"suite", r.suite},
          {"checks", std::move(checks)},
          {"passed", static_cast<int>(r.checks.size()) - failed},
          {"failed", failed},
          {"exit_status", r.exit_status()}};
}

DenseMatrix<FloatScalar> build_float(OperatorKind kind, int n) { return build_operator<FloatScalar>(kind, n); }

Json build_document(OperatorKind kind, int n, Backend backend) {
  Json d{{"operator", to_string(kind)}, {"n", n}, {"backend", to_string(backend)}};
  if (backend == Backend::exact) {
    const auto m = build_operator<ExactScalar>(kind, n);
    d["trace"] = scalar_json(m.trace());
    d["matrix"] = to_json(m);
  } else {
    const auto m = build_float(kind, n);
    d["trace"] = to_json(m.trace());
    d["matrix"] = to_json(m);
  }
  return d;
}

Json spectrum_document(int n, OperatorKind kind, Backend backend) {
  const bool exact = backend == Backend::exact;
  if (exact && n != 5) throw UnsupportedBackend("exact spectrum requires n = 5");
  if (exact && kind != OperatorKind::number && kind != OperatorKind::x && kind != OperatorKind::y)
    throw UnsupportedBackend("exact spectrum is available for number, x and y");

  const auto fm = build_float(kind, n);
  const auto eig = jacobi_eigh(fm);
  Json d{{"n", n}, {"operator", to_string(kind)}, {"backend", to_string(backend)}, {"eigenvalues", doubles(eig.values)}};
  if (exact) d["eigenpairs"] = kind == OperatorKind::number ? number_pairs(fm, eig) : position_pairs(kind);
  return d;
}

Json report_document() {
  const QuinticConstants k = QuinticConstants::standard();
  const SymmetrizerT<ExactScalar> t(5);
  const auto num = build_operator<ExactScalar>(OperatorKind::number, 5);
  const auto nt = conjugate_by_t(num, t);
  const auto blocks = block_split(nt, 0.0);
  const ZeroCensus sym_census = zero_count(nt);
  const ZeroCensus plain_census = zero_count(num);

  Json d{{"n", 5}, {"operator", "number"}, {"trace", scalar_json(num.trace())}};
  d["n_tilde"] = {{"n3", to_json(blocks.sym_block)},
                  {"n2", to_json(blocks.anti_block)},
                  {"offblock_zero", blocks.offblock_zero},
                  {"n3_matches_closed_form", blocks.sym_block == closed_form::n3(k)},
                  {"n2_matches_closed_form", blocks.anti_block == closed_form::n2(k)}};
  d["zeros_in_symmetrized"] = sym_census.zeros;
  d["nonzeros_in_symmetrized"] = sym_census.nonzeros;
  d["nonzeros_in_original"] = plain_census.nonzeros;

  const auto vecs = assemble_dft_eigenvectors(k);
  const auto oracle = jacobi_eigh(to_float(nt));
  Json pairs = Json::array();
  ExactScalar sum(0);
  double oracle_diff = 0.0;
  for (const DftEigenvector& e : vecs) {
    const double value = e.pair.value.to_complex().real();
    double nearest = INFINITY;
    for (double o : oracle.values) nearest = std::min(nearest, std::abs(o - value));
    oracle_diff = std::max(oracle_diff, nearest);
    sum = sum + e.pair.value;
    const int phase = e.pair.dft_phase.value_or(0);
    pairs.push_back({{"eigenvector", e.name},
                     {"label", e.pair.label},
                     {"block", to_string(e.pair.block)},
                     {"value", to_json(e.pair.value)},
                     {"value_float", value},
                     {"dft_phase", phase},
                     {"dft_eigenvalue", kPhaseNames[phase]},
                     {"phi", to_json(e.pair.vector)},
                     {"f_tilde", to_json(e.f_tilde)},
                     {"f", to_json(e.f)},
                     {"f_normalized", normalized(e.f)},
                     {"exact_eigenvector", is_eigenvector(nt, e.pair.value, e.f_tilde)}});
  }
  d["eigenpairs"] = std::move(pairs);
  d["spectrum_sum"] = scalar_json(sum);
  d["oracle_eigenvalues"] = doubles(oracle.values);
  d["oracle_max_diff"] = oracle_diff;

  bool orthogonal = true;
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t b = a + 1; b < vecs.size(); ++b) orthogonal = orthogonal && inner(vecs[a].f, vecs[b].f).is_zero();
  d["eigenvectors_orthogonal"] = orthogonal;

  // The literal (0₃, φ₁⁽²⁾) form of f̃₃ against the φ₂⁽²⁾ form.
  const auto n2 = n2_closed_spectrum(k);
  ExactVector literal(5, ExactScalar(0));
  literal[3] = n2[0].vector[0];
  literal[4] = n2[0].vector[1];
  const DftEigenvector& f1 = vecs[1];
  const DftEigenvector& f3 = vecs[3];
  Json eps = Json::array();
  for (int j = 0; j < 5; ++j) {
    const ExactVector combo = symmetrized_basis_vector(BasisKind::eps, j);
    const ExactVector direct = t.apply(basis_vector<ExactScalar>(BasisKind::eps, j, 5).components);
    eps.push_back({{"k", j},
                   {"real", all_real(combo)},
                   {"imaginary", all_imaginary(combo)},
                   {"equals_T_eps", combo == direct},
                   {"equals_dft_of_e_tilde",
                    combo == build_operator<ExactScalar>(OperatorKind::dft, 5) *
                                 symmetrized_basis_vector(BasisKind::e, j)}});
  }
  d["resolutions"] = {
      {"f3_tilde",
       {{"literal_form_equals_f1_tilde", literal == f1.f_tilde},
        {"literal_form_is_mu2_eigenvector", is_eigenvector(nt, n2[1].value, literal)},
        {"phi2_form_is_mu2_eigenvector", is_eigenvector(nt, f3.pair.value, f3.f_tilde)},
        {"used", "(0_3, phi_2)"}}},
      {"eps_tilde", std::move(eps)}};

  const CheckList checks = verify_spectrum5(k);
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
  d["verification"] = {{"checks", checks.size()}, {"failed", failed}};
  return d;
}

}  // namespace dftnum
