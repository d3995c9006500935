#include "dftnum/scalar.hpp"

namespace dftnum {

FloatScalar float_root_of_unity(long k, int n) {
  static const FloatScalar quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const long m = ((k % n) + n) % n;
  if ((4 * m) % n == 0) return quarter[4 * m / n];
  const bool lower = 2 * m > n;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(lower ? n - m : m) / n;
  const FloatScalar z(std::cos(theta), std::sin(theta));
  return lower ? std::conj(z) : z;
}

}  // namespace dftnum
