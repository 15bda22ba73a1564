#pragma once

#include <optional>
#include <vector>

#include "subfox/hfunction.hpp"

namespace subfox {

struct WrightPair {
  double a = 0.0;
  double alpha = 1.0;  // nonzero
};

// Psi(z) = sum_n prod Gamma(a_i + alpha_i n) / prod Gamma(b_j + beta_j n) z^n / n!
struct WrightParams {
  std::vector<WrightPair> upper;
  std::vector<WrightPair> lower;
};

struct SeriesValue {
  double value = 0.0;
  // Truncation (first omitted term) plus accumulated rounding.
  double error = 0.0;
  int terms = 0;
};

// Throws DomainError for a zero alpha_i/beta_j or an upper gamma pole,
// DivergentSeriesError when 50 consecutive nonzero terms grow.
SeriesValue generalized_wright_series(const WrightParams& params, double z,
                                      double tol = 1e-16, int max_terms = 5000);

double generalized_wright(const WrightParams& params, double z, double tol = 1e-16);

// Mellin-Barnes form of Psi(-x) for x > 0:
//   (1/2 pi i) int Gamma(s) prod Gamma(a_i - alpha_i s) / prod Gamma(b_j - beta_j s) x^-s ds.
HParams wright_hparams(const WrightParams& params);

double wright_mellin_barnes(const WrightParams& params, double x,
                            const std::optional<ContourSpec>& contour = std::nullopt);

// M_beta = 0Psi1[-; (1-beta, -beta) | -z].
WrightParams m_wright_params(double beta);

// sum (-z)^n / (n! Gamma(1 - beta - n beta)) in extended precision.
SeriesValue m_wright_series(double beta, double z, int max_terms = 2000);

// M_beta(z) for z >= 0. Uses the series when its error bound is below
// 1e-13 relative, the Mellin-Barnes integral otherwise.
double m_wright(double beta, double z);

}  // namespace subfox
