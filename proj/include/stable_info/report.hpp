#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace stable_info {

// Result of an inequality or identity check. slack >= 0 means the bound holds;
// identities carry their relative error instead.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double rel_error = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::pair<std::string, double>> inputs;
  std::string method;

  bool holds(double tol) const { return slack >= -tol; }
};

}  // namespace stable_info
