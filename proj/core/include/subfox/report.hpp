#pragma once

#include <string>

namespace subfox {

// One verification record: a value computed through the H-function route
// against an independent oracle.
struct OracleReport {
  std::string case_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// pass iff rel_err <= tolerance, or abs_err <= tolerance when |rhs| is below
// `near_zero`.
OracleReport make_report(std::string case_id, double lhs, double rhs, double tolerance,
                         double near_zero = 1e-300);

}  // namespace subfox
