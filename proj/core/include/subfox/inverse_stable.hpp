#pragma once

#include "subfox/hfunction.hpp"
#include "subfox/quadrature.hpp"
#include "subfox/report.hpp"
#include "subfox/stable.hpp"

namespace subfox {

// Laws of E_beta(t) = inf{x > 0 : D_beta(x) > t}.
struct InverseStableSpec {
  double beta = 0.5;
  double t = 1.0;

  void validate() const;
};

namespace inverse_stable {

// g(x) = prefactor(spec) * H[delta x | hparams(spec)], delta = t^(-beta).
HParams hparams(const InverseStableSpec& spec);
double prefactor(const InverseStableSpec& spec);

// Density at x >= 0 (`levy` is not a method of this family).
double density(const InverseStableSpec& spec, double x,
               DensityMethod method = DensityMethod::automatic);

double density_integral_oracle(const InverseStableSpec& spec, double x,
                               const QuadratureSpec& quad = {});

double cdf(const InverseStableSpec& spec, double x);

// t^((s-1) beta) Gamma(s) / Gamma(1 - beta + beta s), Re s > 0.
Complex mellin_x(const InverseStableSpec& spec, Complex s);

// H^{1,1}_{1,2}[t^beta s | (0,1); (0,1),(0,beta)], i.e. E_beta(-s t^beta).
double laplace_x(const InverseStableSpec& spec, double s);

// (1/beta) x^(s/beta - 1) Gamma(1 - s/beta) / Gamma(1 - s), 0 < Re s < beta.
Complex mellin_t(double beta, double x, Complex s);

// s^(beta-1) exp(-x s^beta).
double laplace_t(double beta, double x, double s);

// The time transform computed from the H-form of g as a function of t.
double laplace_t_hchain(double beta, double x, double s);

// E[E_beta(t)^r] = Gamma(1+r) / Gamma(1+beta r) t^(beta r), r > 0.
double moment(const InverseStableSpec& spec, double r);

double variance(const InverseStableSpec& spec);

// g(x,t) against (t/beta) x^(-1-1/beta) f(t x^(-1/beta), 1).
OracleReport duality_check(double beta, double x, double t, double tolerance = 1e-6);

}  // namespace inverse_stable
}  // namespace subfox
