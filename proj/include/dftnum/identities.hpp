#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dftnum/check.hpp"
#include "dftnum/quintic.hpp"

namespace dftnum {

/// The named constants behind every closed-form N = 5 expression. Closed
/// forms read them from here rather than from constant(), so a test can
/// flip one of them and watch the identities fail.
struct QuinticConstants {
  RealQuintic s1, s2, c1, c2, sqrt5;
  ComplexQuintic q;

  static QuinticConstants standard();
  static const std::vector<std::string>& names();

  /// Copy with the named constant negated. Throws std::invalid_argument on
  /// an unknown name.
  QuinticConstants with_flipped(std::string_view name) const;
};

/// s₁s₂ = √5, s₂ = c₁s₁, c₁c₂ = −1, c₁ + c₂ = −1, s₁² = 2 − c₂,
/// s₂² = 2 − c₁, Σ qⁿ = 0, q⁵ = 1, 2(2 − s₁) = (s₂ + c₂)².
CheckList field_identities(const QuinticConstants& k);

}  // namespace dftnum
