#include "subfox/inverse_stable.hpp"

#include <cmath>
#include <sstream>

#include "subfox/error.hpp"
#include "subfox/wright.hpp"

namespace subfox {

void InverseStableSpec::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("inverse stable: beta must lie in (0, 1)");
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("inverse stable: t must be positive");
}

namespace inverse_stable {

namespace {

void check_x(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("inverse stable: x must be non-negative");
  }
}

constexpr double kSeriesTrust = 1e-13;

}  // namespace

HParams hparams(const InverseStableSpec& spec) {
  spec.validate();
  return make_hparams(1, 0, {{Coef(1) - Coef(spec.beta), Coef(spec.beta)}},
                      {{Coef(0), Coef(1)}}, std::pow(spec.t, -spec.beta));
}

double prefactor(const InverseStableSpec& spec) {
  spec.validate();
  return std::pow(spec.t, -spec.beta);
}

double density(const InverseStableSpec& spec, double x, DensityMethod method) {
  spec.validate();
  check_x(x);
  const double k = prefactor(spec);
  const double w = x * k;
  auto via_h = [&] {
    if (x == 0.0) return k / std::tgamma(1.0 - spec.beta);
    return k * eval_nonnegative(hparams(spec), w);
  };
  switch (method) {
    case DensityMethod::levy:
      throw MethodUnavailableError("inverse stable: no levy method");
    case DensityMethod::hfun:
      return via_h();
    case DensityMethod::mwright:
      return k * m_wright(spec.beta, w);
    case DensityMethod::automatic:
      break;
  }
  if (w <= 5.0) {
    SeriesValue s = m_wright_series(spec.beta, w);
    if (s.error <= kSeriesTrust * std::fabs(s.value)) return k * s.value;
  }
  return via_h();
}

double density_integral_oracle(const InverseStableSpec& spec, double x,
                               const QuadratureSpec& quad) {
  spec.validate();
  check_x(x);
  const double b = spec.beta;
  const double t = spec.t;
  const double cb = std::cos(b * M_PI);
  const double sb = std::sin(b * M_PI);
  auto g = [&](double u) {
    if (u <= 0.0) return 0.0;
    double ub = std::pow(u, b);
    return std::pow(u, b - 1.0) * std::exp(-t * u - x * ub * cb) *
           std::sin(b * M_PI - x * ub * sb) / M_PI;
  };
  if (x == 0.0) return integrate_positive(g, quad).value;
  auto zero = [&](long k) {
    return k < 0 ? 0.0 : std::pow((b + static_cast<double>(k)) * M_PI / (x * sb), 1.0 / b);
  };
  std::vector<double> terms;
  double sum = 0.0;
  int quiet = 0;
  for (long k = -1; k < quad.max_intervals; ++k) {
    double piece = integrate_interval(g, zero(k), zero(k + 1), quad).value;
    terms.push_back(piece);
    sum += piece;
    if (std::fabs(piece) <= 1e-16 * std::fabs(sum)) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  Integral lim = alternating_limit(terms);
  if (lim.error > 1e-9 * std::fabs(lim.value)) {
    throw NonConvergedError("inverse stable oracle: oscillatory integral did not settle",
                            lim.error / std::max(std::fabs(lim.value), 1e-300));
  }
  return lim.value;
}

double cdf(const InverseStableSpec& spec, double x) {
  spec.validate();
  if (std::isnan(x)) throw DomainError("inverse stable cdf: x is NaN");
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  double v = hdist_cdf(hparams(spec), x);
  if (v < 0.0 && v > -1e-10) return 0.0;
  if (v > 1.0 && v < 1.0 + 1e-10) return 1.0;
  return v;
}

Complex mellin_x(const InverseStableSpec& spec, Complex s) {
  spec.validate();
  if (!(s.real() > 0.0)) {
    std::ostringstream os;
    os << "inverse stable mellin_x: Re s = " << s.real() << " must be positive";
    throw StripError(os.str(), 0.0, HUGE_VAL);
  }
  const double b = spec.beta;
  return std::exp((s - 1.0) * b * std::log(spec.t)) * gamma_ratio(s, 1.0 - b + b * s);
}

double laplace_x(const InverseStableSpec& spec, double s) {
  spec.validate();
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw DomainError("inverse stable laplace_x: s must be >= 0");
  }
  if (s == 0.0) return 1.0;
  HParams h = make_hparams(1, 1, {{Coef(0), Coef(1)}},
                           {{Coef(0), Coef(1)}, {Coef(0), Coef(spec.beta)}});
  return evaluate(h, std::pow(spec.t, spec.beta) * s).value.real();
}

Complex mellin_t(double beta, double x, Complex s) {
  InverseStableSpec{beta, 1.0}.validate();
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("inverse stable mellin_t: x must be positive");
  }
  if (!(s.real() > 0.0 && s.real() < beta)) {
    std::ostringstream os;
    os << "inverse stable mellin_t: Re s = " << s.real() << " must lie in (0, " << beta << ")";
    throw StripError(os.str(), 0.0, beta);
  }
  return std::exp((s / beta - 1.0) * std::log(x)) * gamma_ratio(1.0 - s / beta, 1.0 - s) /
         beta;
}

double laplace_t(double beta, double x, double s) {
  InverseStableSpec{beta, 1.0}.validate();
  check_x(x);
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("inverse stable laplace_t: s must be positive");
  }
  return std::pow(s, beta - 1.0) * std::exp(-x * std::pow(s, beta));
}

double laplace_t_hchain(double beta, double x, double s) {
  InverseStableSpec{beta, 1.0}.validate();
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("inverse stable laplace_t: x must be positive");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("inverse stable laplace_t: s must be positive");
  }
  // As a function of t: g = (1/(beta^2 x)) H^{0,1}_{1,1}[t x^(-1/beta) | (1,1/beta); (1,1)].
  Coef inv = Coef(1) / Coef(beta);
  HParams g = make_hparams(0, 1, {{Coef(1), inv}}, {{Coef(1), Coef(1)}},
                           std::pow(x, -1.0 / beta));
  return laplace_of_h(g, s) / (beta * beta * x);
}

double moment(const InverseStableSpec& spec, double r) {
  spec.validate();
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("inverse stable moment: r must be > 0");
  return std::exp(std::lgamma(1.0 + r) - std::lgamma(1.0 + spec.beta * r) +
                  spec.beta * r * std::log(spec.t));
}

double variance(const InverseStableSpec& spec) {
  spec.validate();
  const double b = spec.beta;
  double g1 = std::tgamma(1.0 + b);
  return (2.0 / std::tgamma(1.0 + 2.0 * b) - 1.0 / (g1 * g1)) * std::pow(spec.t, 2.0 * b);
}

OracleReport duality_check(double beta, double x, double t, double tolerance) {
  InverseStableSpec spec{beta, t};
  spec.validate();
  if (!(x > 0.0)) throw DomainError("duality_check: x must be positive");
  // Both sides through their own H-function parameter sets, so the
  // comparison does not reuse a shared M-Wright value.
  double lhs = density(spec, x, DensityMethod::hfun);
  double y = t * std::pow(x, -1.0 / beta);
  double rhs = t / beta * std::pow(x, -1.0 - 1.0 / beta) *
               stable::density({beta, 1.0}, y, DensityMethod::hfun);
  std::ostringstream id;
  id << "duality beta=" << beta << " x=" << x << " t=" << t;
  return make_report(id.str(), lhs, rhs, tolerance);
}

}  // namespace inverse_stable
}  // namespace subfox
