#include "subfox/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "subfox/error.hpp"

namespace subfox {

namespace {

void check(const Integral& r, const QuadratureSpec& spec, const char* what) {
  if (!std::isfinite(r.value)) {
    throw NonConvergedError(std::string(what) + ": non-finite integral", HUGE_VAL);
  }
  double scale = std::max(std::fabs(r.value), 1e-300);
  if (r.error > 1e3 * spec.rel_tol * scale && r.error > 1e-15) {
    throw NonConvergedError(std::string(what) + ": requested accuracy not reached",
                            r.error / scale);
  }
}

}  // namespace

Integral integrate_interval(const RealFunction& f, double a, double b,
                            const QuadratureSpec& spec) {
  if (a == b) return {};
  boost::math::quadrature::tanh_sinh<double> rule(spec.max_levels);
  Integral r;
  double l1 = 0.0;
  r.value = rule.integrate(f, a, b, spec.rel_tol, &r.error, &l1);
  check(r, spec, "integrate_interval");
  return r;
}

Integral integrate_tail(const RealFunction& f, double a, const QuadratureSpec& spec) {
  boost::math::quadrature::exp_sinh<double> rule(spec.max_levels);
  Integral r;
  double l1 = 0.0;
  auto shifted = [&](double u) { return f(a + u); };
  r.value = rule.integrate(shifted, 0.0, std::numeric_limits<double>::infinity(), spec.rel_tol,
                           &r.error, &l1);
  check(r, spec, "integrate_tail");
  return r;
}

Integral integrate_positive(const RealFunction& f, const QuadratureSpec& spec) {
  double split = spec.split > 0.0 ? spec.split : 1.0;
  Integral head = integrate_interval(f, 0.0, split, spec);
  Integral tail = integrate_tail(f, split, spec);
  return {head.value + tail.value, head.error + tail.error};
}

Integral alternating_limit(const std::vector<double>& terms) {
  if (terms.empty()) return {};
  std::vector<double> partial(terms.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    partial[i] = acc;
  }
  // Repeated averaging of the last few partial sums.
  std::size_t depth = std::min<std::size_t>(partial.size(), 24);
  std::vector<double> row(partial.end() - static_cast<long>(depth), partial.end());
  double prev = row.back();
  while (row.size() > 1) {
    prev = row.back();
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return {row[0], std::fabs(row[0] - prev)};
}

}  // namespace subfox
