#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dftnum/identities.hpp"
#include "dftnum/json_io.hpp"
#include "support.hpp"

using namespace dftnum;
using dftnum::testing::random_complex;
using dftnum::testing::random_exact;
using dftnum::testing::random_real;

namespace {

const RealQuintic s1 = RealQuintic::s1();
const RealQuintic s2 = two_sin5(2);
const RealQuintic c1 = two_cos5(1);
const RealQuintic c2 = two_cos5(2);
const RealQuintic sqrt5 = RealQuintic::sqrt5();

}  // namespace

TEST_CASE("rational keeps lowest terms and positive denominator") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_string() == "0/1");
  CHECK(Rational(20).to_string() == "20/1");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("rational arithmetic does not overflow") {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x *= Rational(1'000'003, 7);
  for (int i = 0; i < 200; ++i) x /= Rational(1'000'003, 7);
  CHECK(x == Rational(1));
}

TEST_CASE("rational square roots") {
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK_FALSE(Rational(2).sqrt_exact().has_value());
  CHECK_FALSE(Rational(-4).sqrt_exact().has_value());
}

TEST_CASE("field multiplication examples") {
  CHECK(sqrt5 * sqrt5 == RealQuintic(5));
  CHECK(s1 * s1 == RealQuintic(Rational(5, 2), Rational(1, 2), 0, 0));
  CHECK(s1 * s2 == sqrt5);
}

TEST_CASE("field inversion examples") {
  CHECK(RealQuintic(1).inverse() == RealQuintic(1));
  CHECK(c1.inverse() == -c2);
  CHECK(-c2 == RealQuintic(Rational(1, 2), Rational(1, 2), 0, 0));
  CHECK(sqrt5.inverse() == RealQuintic(0, Rational(1, 5), 0, 0));
  CHECK_THROWS_AS(RealQuintic(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(ComplexQuintic(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(ExactScalar(0).inverse(), DivisionByZero);
}

TEST_CASE("constants") {
  CHECK(constant(ConstantKind::s, 0).is_zero());
  CHECK(constant(ConstantKind::c, 1) == ComplexQuintic(RealQuintic(Rational(-1, 2), Rational(1, 2), 0, 0)));
  CHECK(constant(ConstantKind::s, 2) == ComplexQuintic(RealQuintic(0, 0, Rational(-1, 2), Rational(1, 2))));
  CHECK(constant(ConstantKind::s, 2) == ComplexQuintic(c1 * s1));
  CHECK(constant(ConstantKind::q, 0) == ComplexQuintic(1));
  CHECK(two_sin5(3) == -s2);
  CHECK(two_sin5(4) == -s1);
  CHECK(two_cos5(3) == c2);
  CHECK(two_cos5(4) == c1);
  CHECK(two_sin5(-1) == two_sin5(4));
  for (int n = 0; n < 5; ++n) {
    const ComplexQuintic q = constant(ConstantKind::q, n);
    CHECK(q == ComplexQuintic(two_cos5(n) * RealQuintic(Rational(1, 2)), two_sin5(n) * RealQuintic(Rational(1, 2))));
    CHECK(q.norm() == RealQuintic(1));
    CHECK(q.conj() == constant(ConstantKind::q, 5 - n));
  }
}

TEST_CASE("float embedding") {
  CHECK(s1.to_double() == doctest::Approx(1.9021130326).epsilon(1e-10));
  CHECK(c2.to_double() == doctest::Approx(-1.6180339887).epsilon(1e-10));
  const auto q = constant(ConstantKind::q, 1).to_complex();
  CHECK(q.real() == doctest::Approx(0.3090169944).epsilon(1e-10));
  CHECK(q.imag() == doctest::Approx(0.9510565163).epsilon(1e-10));
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(two_sin5(n).to_double() - 2 * std::sin(2 * std::numbers::pi * n / 5)) < 1e-14);
    CHECK(std::abs(two_cos5(n).to_double() - 2 * std::cos(2 * std::numbers::pi * n / 5)) < 1e-14);
  }
}

TEST_CASE("exact zero test") {
  CHECK(ComplexQuintic(0).is_zero());
  CHECK((s2 - c1 * s1).is_zero());
  CHECK((c1 + c2 + RealQuintic(1)).is_zero());
  CHECK_FALSE(RealQuintic(0, 0, 0, Rational(1, 1000000)).is_zero());
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20251018);
  for (int trial = 0; trial < 60; ++trial) {
    const ComplexQuintic x = random_complex(rng), y = random_complex(rng), z = random_complex(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    CHECK((x * y).conj() == x.conj() * y.conj());
    if (!x.is_zero()) CHECK(x * x.inverse() == ComplexQuintic(1));
  }
}

TEST_CASE("real field inverse and square root on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const RealQuintic x = random_real(rng);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == RealQuintic(1));
    const RealQuintic sq = x * x;
    const auto root = sq.sqrt_exact();
    REQUIRE(root.has_value());
    CHECK(*root * *root == sq);
    CHECK(root->to_double() >= 0.0);
    CHECK(std::abs(root->to_double() - std::abs(x.to_double())) < 1e-9);
  }
  CHECK_FALSE(RealQuintic(2).sqrt_exact().has_value());
  CHECK_FALSE(RealQuintic(-1).sqrt_exact().has_value());
  CHECK(RealQuintic(Rational(5, 2), Rational(1, 2), 0, 0).sqrt_exact() == s1);
}

TEST_CASE("exact scalar with sqrt2") {
  std::mt19937 rng(11);
  const ExactScalar r2 = ExactScalar::sqrt2();
  CHECK(r2 * r2 == ExactScalar(2));
  CHECK(r2 * ScalarOps<ExactScalar>::inv_sqrt2() == ExactScalar(1));
  for (int trial = 0; trial < 30; ++trial) {
    const ExactScalar x = random_exact(rng), y = random_exact(rng);
    CHECK(x * (y + x) == x * y + x * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == ExactScalar(1));
    CHECK(dftnum::testing::rel_err((x * y).to_complex(), x.to_complex() * y.to_complex()) < 1e-12);
  }
}

TEST_CASE("float embedding is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexQuintic x = random_complex(rng), y = random_complex(rng);
    CHECK(dftnum::testing::rel_err((x * y).to_complex(), x.to_complex() * y.to_complex()) < 1e-12);
    CHECK(dftnum::testing::rel_err((x + y).to_complex(), x.to_complex() + y.to_complex()) < 1e-12);
  }
}

TEST_CASE("the nine identities hold") {
  const CheckList checks = field_identities(QuinticConstants::standard());
  CHECK(checks.size() == 9);
  for (const Check& c : checks) {
    INFO(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("flipping any constant breaks an identity") {
  const QuinticConstants base = QuinticConstants::standard();
  for (const std::string& name : QuinticConstants::names()) {
    INFO(name);
    CHECK_FALSE(all_passed(field_identities(base.with_flipped(name))));
  }
  CHECK_THROWS_AS(base.with_flipped("s7"), std::invalid_argument);
}

TEST_CASE("coordinate serialization round trip") {
  const Json j = to_json(ComplexQuintic(c1, s2));
  CHECK(j == Json::array({"-1/2", "1/2", "0/1", "0/1", "0/1", "0/1", "-1/2", "1/2"}));
  CHECK(complex_quintic_from_json(j) == ComplexQuintic(c1, s2));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactScalar x = random_exact(rng);
    CHECK(exact_from_json(to_json(x)) == x);
  }
  CHECK(to_json(ExactScalar(3)).is_array());
  CHECK(to_json(ExactScalar::sqrt2()).is_object());
  CHECK_THROWS(complex_quintic_from_json(Json::array({"1/2"})));
}
