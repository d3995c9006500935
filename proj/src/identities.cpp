#include "dftnum/identities.hpp"

#include <cmath>
#include <stdexcept>

namespace dftnum {

QuinticConstants QuinticConstants::standard() {
  return {two_sin5(1), two_sin5(2), two_cos5(1), two_cos5(2), RealQuintic::sqrt5(),
          constant(ConstantKind::q, 1)};
}

const std::vector<std::string>& QuinticConstants::names() {
  static const std::vector<std::string> n{"s1", "s2", "c1", "c2", "sqrt5", "q"};
  return n;
}

QuinticConstants QuinticConstants::with_flipped(std::string_view name) const {
  QuinticConstants out = *this;
  if (name == "s1") out.s1 = -s1;
  else if (name == "s2") out.s2 = -s2;
  else if (name == "c1") out.c1 = -c1;
  else if (name == "c2") out.c2 = -c2;
  else if (name == "sqrt5") out.sqrt5 = -sqrt5;
  else if (name == "q") out.q = -q;
  else throw std::invalid_argument("unknown constant: " + std::string(name));
  return out;
}

namespace {

Check zero_check(std::string name, const ComplexQuintic& diff) {
  return {std::move(name), diff.is_zero(), std::abs(diff.to_complex()), "exact"};
}

}  // namespace

CheckList field_identities(const QuinticConstants& k) {
  CheckList out;
  out.push_back(zero_check("s1*s2 = sqrt5", k.s1 * k.s2 - k.sqrt5));
  out.push_back(zero_check("s2 = c1*s1", k.s2 - k.c1 * k.s1));
  out.push_back(zero_check("c1*c2 = -1", k.c1 * k.c2 + RealQuintic(1)));
  out.push_back(zero_check("c1 + c2 = -1", k.c1 + k.c2 + RealQuintic(1)));
  out.push_back(zero_check("s1^2 = 2 - c2", k.s1 * k.s1 - (RealQuintic(2) - k.c2)));
  out.push_back(zero_check("s2^2 = 2 - c1", k.s2 * k.s2 - (RealQuintic(2) - k.c1)));
  ComplexQuintic sum(0), power(1);
  for (int n = 0; n < 5; ++n) {
    sum += power;
    power *= k.q;
  }
  out.push_back(zero_check("sum q^n = 0", sum));
  out.push_back(zero_check("q^5 = 1", power - ComplexQuintic(1)));
  RealQuintic sc = k.s2 + k.c2;
  out.push_back(zero_check("2(2 - s1) = (s2 + c2)^2", RealQuintic(2) * (RealQuintic(2) - k.s1) - sc * sc));
  return out;
}

}  // namespace dftnum
