#include "subfox/tempered.hpp"

#include <cmath>
#include <sstream>

#include "subfox/error.hpp"

namespace subfox {

void TemperedSpec::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("tempered: beta must lie in (0, 1)");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("tempered: lambda must be non-negative");
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("tempered: t must be positive");
}

namespace tempered {

double density(const TemperedSpec& spec, double x) {
  spec.validate();
  double f = stable::density(spec.stable(), x);
  if (spec.lambda == 0.0) return f;
  if (f == 0.0) return 0.0;
  double log_tilt = -spec.lambda * x + std::pow(spec.lambda, spec.beta) * spec.t;
  return std::exp(std::log(f) + log_tilt);
}

double laplace_x(const TemperedSpec& spec, double s) {
  spec.validate();
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("tempered laplace_x: s must be >= 0");
  const double b = spec.beta;
  return std::exp(-spec.t * (std::pow(spec.lambda + s, b) - std::pow(spec.lambda, b)));
}

double laplace_x_hchain(const TemperedSpec& spec, double s) {
  spec.validate();
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("tempered laplace_x: s must be >= 0");
  // The tilt turns the transform into the stable one at s + lambda.
  double shifted = stable::laplace_x_hchain(spec.stable(), s + spec.lambda);
  return std::exp(std::log(shifted) + std::pow(spec.lambda, spec.beta) * spec.t);
}

double laplace_t(double beta, double lambda, double x, double s) {
  TemperedSpec{beta, lambda, 1.0}.validate();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("tempered laplace_t: x must be positive");
  double lb = std::pow(lambda, beta);
  if (!(s > lb) || !std::isfinite(s)) {
    std::ostringstream os;
    os << "tempered laplace_t: s = " << s << " must exceed lambda^beta = " << lb;
    throw DomainError(os.str());
  }
  double u = s - lb;
  HParams h = make_hparams(1, 1, {{Coef(0), Coef(1)}, {Coef(0), Coef(beta)}},
                           {{Coef(0), Coef(1)}});
  double z = 1.0 / (u * std::pow(x, beta));
  return std::exp(-lambda * x) / (u * x) * evaluate(h, z).value.real();
}

HParams mellin_x_hparams(double beta, Complex s) {
  Coef inv = Coef(1) / Coef(beta);
  Coef a1 = s.imag() == 0.0 ? Coef(1.0 - s.real()) : Coef(Complex(1.0 - s.real(), -s.imag()));
  return make_hparams(0, 2, {{a1, Coef(1)}, {Coef(1) - inv, inv}}, {{Coef(0), Coef(1)}});
}

Complex mellin_x(const TemperedSpec& spec, Complex s) {
  spec.validate();
  if (spec.lambda == 0.0) {
    throw DomainError("tempered mellin_x: lambda = 0 has no tempered form; use the stable one");
  }
  if (!(s.real() > 0.0)) {
    std::ostringstream os;
    os << "tempered mellin_x: Re s = " << s.real() << " must be positive";
    throw StripError(os.str(), 0.0, HUGE_VAL);
  }
  const double b = spec.beta;
  const double lam = spec.lambda;
  double tb = std::pow(spec.t, 1.0 / b);
  Complex log_pref = std::pow(lam, b) * spec.t - std::log(b * tb) - s * std::log(lam);
  HParams h = mellin_x_hparams(b, s);
  Complex v = eval_complex(h, 1.0 / (tb * lam));
  return std::exp(log_pref) * v;
}

double moment(const TemperedSpec& spec, int k) {
  spec.validate();
  if (k < 1) throw DomainError("tempered moment: k must be >= 1");
  if (spec.lambda == 0.0) {
    throw DomainError("tempered moment: moments of the untempered law are infinite");
  }
  const double b = spec.beta;
  const double lam = spec.lambda;
  // phi(s) = -t((lam+s)^b - lam^b); phi^(j)(0) = -t b(b-1)...(b-j+1) lam^(b-j).
  std::vector<double> phi(static_cast<std::size_t>(k) + 1, 0.0);
  double falling = 1.0;
  for (int j = 1; j <= k; ++j) {
    falling *= b - (j - 1);
    phi[static_cast<std::size_t>(j)] = -spec.t * falling * std::pow(lam, b - j);
  }
  // L = exp(phi): L^(n) = sum_{i<n} C(n-1, i) phi^(i+1) L^(n-1-i).
  std::vector<double> L(static_cast<std::size_t>(k) + 1, 0.0);
  L[0] = 1.0;
  for (int n = 1; n <= k; ++n) {
    double acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i < n; ++i) {
      acc += binom * phi[static_cast<std::size_t>(i) + 1] * L[static_cast<std::size_t>(n - 1 - i)];
      binom = binom * (n - 1 - i) / (i + 1);
    }
    L[static_cast<std::size_t>(n)] = acc;
  }
  return (k % 2 ? -1.0 : 1.0) * L[static_cast<std::size_t>(k)];
}

}  // namespace tempered
}  // namespace subfox
