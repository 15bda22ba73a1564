#pragma once

#include "subfox/hfunction.hpp"
#include "subfox/stable.hpp"

namespace subfox {

// Exponentially tempered stable subordinator:
//   f(x, t) = exp(-lambda x + lambda^beta t) f_beta(x, t).
struct TemperedSpec {
  double beta = 0.5;
  double lambda = 1.0;
  double t = 1.0;

  void validate() const;
  StableSpec stable() const { return {beta, t}; }
};

namespace tempered {

double density(const TemperedSpec& spec, double x);

// exp(-t((lambda + s)^beta - lambda^beta)), s >= 0.
double laplace_x(const TemperedSpec& spec, double s);

// The same transform from the H-form of the stable factor.
double laplace_x_hchain(const TemperedSpec& spec, double s);

// int e^(-s t) f(x, t) dt for s > lambda^beta:
//   (e^(-lambda x) / (u x)) H^{1,1}_{2,1}[1/(u x^beta) | (0,1),(0,beta); (0,1)],  u = s - lambda^beta.
double laplace_t(double beta, double lambda, double x, double s);

// Parameters H^{0,2}_{2,1}[. | (1-s,1),(1-1/beta,1/beta); (0,1)] of the Mellin transform.
HParams mellin_x_hparams(double beta, Complex s);

// int x^(s-1) f dx, Re s > 0, lambda > 0.
Complex mellin_x(const TemperedSpec& spec, Complex s);

// E[X^k], k >= 1, from the Taylor coefficients of laplace_x at 0.
double moment(const TemperedSpec& spec, int k);

}  // namespace tempered
}  // namespace subfox
