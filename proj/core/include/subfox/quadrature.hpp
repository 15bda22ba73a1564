#pragma once

#include <functional>
#include <vector>

namespace subfox {

// Settings for the real-line integrators used by the oracles.
struct QuadratureSpec {
  double rel_tol = 1e-11;
  // Refinement depth for the double-exponential rules.
  int max_levels = 15;
  // Interior break point for integrals over (0, inf); 0 selects 1.
  double split = 0.0;
  // Maximum number of zero-to-zero intervals for oscillatory integrals.
  int max_intervals = 4000;
};

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

using RealFunction = std::function<double(double)>;

// Integral over [a, b] (finite) by tanh-sinh.
Integral integrate_interval(const RealFunction& f, double a, double b,
                            const QuadratureSpec& spec = {});

// Integral over [a, inf) by exp-sinh.
Integral integrate_tail(const RealFunction& f, double a, const QuadratureSpec& spec = {});

// Integral over (0, inf), split at spec.split.
Integral integrate_positive(const RealFunction& f, const QuadratureSpec& spec = {});

// Sum of a slowly converging alternating sequence of partial integrals
// (terms[k] = integral over the k-th zero-to-zero interval) by repeated
// averaging of partial sums. Returns the accelerated limit and the change
// in the last step.
Integral alternating_limit(const std::vector<double>& terms);

}  // namespace subfox
