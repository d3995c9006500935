#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dftnum {

/// One named verification outcome.
struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

inline void append(CheckList& to, CheckList from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

}  // namespace dftnum
