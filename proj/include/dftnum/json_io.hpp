#pragma once

#include <json.hpp>

#include <ostream>
#include <string>

#include "dftnum/matrix.hpp"

namespace dftnum {

using Json = nlohmann::ordered_json;

/// Exact scalars in K(i): eight "p/q" strings, real coordinates first, each
/// in the order 1, √5, s₁, √5·s₁. Values with a √2 component are written
/// as {"k": [...8], "sqrt2": [...8]}, meaning k + √2·sqrt2.
Json to_json(const ComplexQuintic& x);
Json to_json(const ExactScalar& x);
/// Complex double as [re, im].
Json to_json(const FloatScalar& x);

ComplexQuintic complex_quintic_from_json(const Json& j);
ExactScalar exact_from_json(const Json& j);

template <class S>
Json to_json(const Vector<S>& v) {
  Json out = Json::array();
  for (const S& x : v) out.push_back(to_json(x));
  return out;
}

/// Row-major nested arrays.
template <class S>
Json to_json(const DenseMatrix<S>& m) {
  Json out = Json::array();
  for (int r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// 17 significant digits, with −0 written as 0.
std::string format_double(double v);

/// One line per row, comma separated. Real matrices print plain numbers;
/// otherwise every cell is "a+bi".
void write_csv(std::ostream& os, const DenseMatrix<FloatScalar>& m);

}  // namespace dftnum
