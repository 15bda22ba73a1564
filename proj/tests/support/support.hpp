#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "subfox/quadrature.hpp"

namespace subfox::testing {

inline double rel_err(double a, double b) {
  if (b == 0.0) return std::fabs(a);
  return std::fabs(a - b) / std::fabs(b);
}

// Integral of f over (0, inf).
inline double integral(const std::function<double(double)>& f, double rel_tol = 1e-10) {
  return integrate_positive(f, QuadratureSpec{rel_tol}).value;
}

// w * f with 0 * inf read as 0, for weighted integrands far in the tail.
inline double times(double w, double f) { return f == 0.0 ? 0.0 : w * f; }

inline double levy(double x, double t) {
  if (x <= 0.0) return 0.0;
  return t / (2.0 * std::sqrt(M_PI)) * std::exp(-1.5 * std::log(x) - t * t / (4.0 * x));
}

// e^{-x^2/(4t)} / sqrt(pi t): the inverse law at beta = 1/2.
inline double half_inverse(double x, double t) {
  return std::exp(-x * x / (4.0 * t)) / std::sqrt(M_PI * t);
}

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace subfox::testing
