#include "dftnum/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dftnum {

namespace {

double clean(double v) { return v == 0.0 ? 0.0 : v; }

RealQuintic real_from_strings(const Json& j, std::size_t offset) {
  return {Rational::parse(j.at(offset).get<std::string>()), Rational::parse(j.at(offset + 1).get<std::string>()),
          Rational::parse(j.at(offset + 2).get<std::string>()),
          Rational::parse(j.at(offset + 3).get<std::string>())};
}

}  // namespace

Json to_json(const ComplexQuintic& x) {
  Json out = Json::array();
  for (const RealQuintic* part : {&x.re(), &x.im()})
    for (const Rational& c : part->coords()) out.push_back(c.to_string());
  return out;
}

Json to_json(const ExactScalar& x) {
  if (x.in_k()) return to_json(x.k());
  return Json{{"k", to_json(x.k())}, {"sqrt2", to_json(x.r2())}};
}

Json to_json(const FloatScalar& x) { return Json::array({clean(x.real()), clean(x.imag())}); }

ComplexQuintic complex_quintic_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument("exact scalar must be an array of 8 rational strings");
  return {real_from_strings(j, 0), real_from_strings(j, 4)};
}

ExactScalar exact_from_json(const Json& j) {
  if (j.is_object()) return {complex_quintic_from_json(j.at("k")), complex_quintic_from_json(j.at("sqrt2"))};
  return complex_quintic_from_json(j);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", clean(v));
  return buf;
}

void write_csv(std::ostream& os, const DenseMatrix<FloatScalar>& m) {
  bool real = true;
  for (const FloatScalar& v : m.data()) real = real && v.imag() == 0.0;
  for (int r = 0; r < m.n(); ++r) {
    for (int c = 0; c < m.n(); ++c) {
      if (c) os << ',';
      const FloatScalar v = m(r, c);
      if (real) {
        os << format_double(v.real());
      } else {
        const double im = clean(v.imag());
        os << format_double(v.real()) << (std::signbit(im) ? "-" : "+") << format_double(std::abs(im)) << 'i';
      }
    }
    os << '\n';
  }
}

}  // namespace dftnum
