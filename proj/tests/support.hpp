#pragma once

#include <random>

#include "dftnum/scalar.hpp"

namespace dftnum::testing {

/// Small rationals p/q with |p| ≤ 12, 1 ≤ q ≤ 7.
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  return {num(rng), den(rng)};
}

inline RealQuintic random_real(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline ComplexQuintic random_complex(std::mt19937& rng) { return {random_real(rng), random_real(rng)}; }

inline ExactScalar random_exact(std::mt19937& rng) { return {random_complex(rng), random_complex(rng)}; }

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace dftnum::testing
