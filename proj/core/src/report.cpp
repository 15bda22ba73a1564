#include "subfox/report.hpp"

#include <cmath>

namespace subfox {

OracleReport make_report(std::string case_id, double lhs, double rhs, double tolerance,
                         double near_zero) {
  OracleReport r;
  r.case_id = std::move(case_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.abs_err = std::fabs(lhs - rhs);
  r.rel_err = rhs != 0.0 ? r.abs_err / std::fabs(rhs) : (lhs == 0.0 ? 0.0 : HUGE_VAL);
  bool finite = std::isfinite(lhs) && std::isfinite(rhs);
  if (std::fabs(rhs) < near_zero) {
    r.pass = finite && r.abs_err <= tolerance;
  } else {
    r.pass = finite && r.rel_err <= tolerance;
  }
  return r;
}

}  // namespace subfox
