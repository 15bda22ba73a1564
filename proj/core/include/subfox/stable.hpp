#pragma once

#include "subfox/hfunction.hpp"
#include "subfox/quadrature.hpp"

namespace subfox {

enum class DensityMethod { automatic, hfun, mwright, levy };

const char* method_name(DensityMethod m) noexcept;

// Laws of D_beta(t), the beta-stable subordinator with Laplace exponent s^beta.
struct StableSpec {
  double beta = 0.5;
  double t = 1.0;

  // Throws DomainError unless 0 < beta < 1 and t > 0.
  void validate() const;
};

namespace stable {

// f(x) = prefactor(spec) * H[delta x | hparams(spec)], delta = t^(-1/beta).
HParams hparams(const StableSpec& spec);
double prefactor(const StableSpec& spec);

// Density at x > 0. `levy` is available only for beta = 1/2.
double density(const StableSpec& spec, double x,
               DensityMethod method = DensityMethod::automatic);

// The density as a real integral with an oscillating integrand, summed
// between consecutive zeros of the sine and accelerated by averaging.
double density_integral_oracle(const StableSpec& spec, double x,
                               const QuadratureSpec& quad = {});

double cdf(const StableSpec& spec, double x);

// int x^(s-1) f dx, for Re s < 1 + beta.
Complex mellin_x(const StableSpec& spec, Complex s);

// exp(-t s^beta).
double laplace_x(const StableSpec& spec, double s);

// The same transform computed from the H-form of the density: Laplace
// rewrite, factor cancellation and the exponential closed form.
double laplace_x_hchain(const StableSpec& spec, double s);

// int t^(s-1) f(x, t) dt = x^(beta s - 1) Gamma(s) / Gamma(beta s), 0 < Re s < 1/beta.
Complex mellin_t(double beta, double x, Complex s);

// Parameters of H^{1,1}_{1,2}[. | (0,1); (0,1),(1-beta,beta)].
HParams laplace_t_hparams(double beta);

// int e^(-s t) f(x, t) dt = x^(beta-1) H^{1,1}_{1,2}[x^beta s | (0,1); (0,1),(1-beta,beta)].
double laplace_t(double beta, double x, double s);

// (t / (2 sqrt(pi))) x^(-3/2) exp(-t^2 / (4x)).
double levy_half_density(double x, double t);

}  // namespace stable
}  // namespace subfox
