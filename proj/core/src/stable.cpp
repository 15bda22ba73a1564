#include "subfox/stable.hpp"

#include <cmath>
#include <sstream>

#include "subfox/error.hpp"
#include "subfox/wright.hpp"

namespace subfox {

const char* method_name(DensityMethod m) noexcept {
  switch (m) {
    case DensityMethod::automatic:
      return "auto";
    case DensityMethod::hfun:
      return "hfun";
    case DensityMethod::mwright:
      return "mwright";
    case DensityMethod::levy:
      return "levy";
  }
  return "?";
}

void StableSpec::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("stable: beta must lie in (0, 1)");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("stable: t must be positive");
}

namespace stable {

namespace {

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("stable: x must be positive");
}

// Below this relative error bound the M-Wright series is used as is.
constexpr double kSeriesTrust = 1e-13;

double clamp_unit(double v) {
  if (v < 0.0 && v > -1e-10) return 0.0;
  if (v > 1.0 && v < 1.0 + 1e-10) return 1.0;
  return v;
}

}  // namespace

HParams hparams(const StableSpec& spec) {
  spec.validate();
  Coef inv = Coef(1) / Coef(spec.beta);
  return make_hparams(0, 1, {{Coef(1) - inv, inv}}, {{Coef(0), Coef(1)}},
                      std::pow(spec.t, -1.0 / spec.beta));
}

double prefactor(const StableSpec& spec) {
  spec.validate();
  return 1.0 / (spec.beta * std::pow(spec.t, 1.0 / spec.beta));
}

double levy_half_density(double x, double t) {
  check_x(x);
  if (!(t > 0.0)) throw DomainError("levy_half_density: t must be positive");
  if (x == 0.0) return 0.0;
  const double lx = std::log(x);
  return t / (2.0 * std::sqrt(M_PI)) * std::exp(-1.5 * lx - t * t / (4.0 * x));
}

double density(const StableSpec& spec, double x, DensityMethod method) {
  spec.validate();
  check_x(x);
  const double b = spec.beta;
  auto via_h = [&] {
    // Scale in logs: t^(-1/beta) under- or overflows long before the density does.
    const double log_scale = -std::log(spec.t) / b;
    const double z = std::exp(std::log(x) + log_scale);
    if (z == 0.0) return 0.0;
    HParams p = hparams({b, 1.0});
    double h = eval_nonnegative(p, z);
    if (h == 0.0) return 0.0;
    return std::exp(std::log(h) + log_scale) / b;
  };
  auto mw_scale = [&] { return b * spec.t * std::pow(x, -b - 1.0); };
  auto scaled = [&](double mw) { return mw == 0.0 ? 0.0 : mw_scale() * mw; };
  switch (method) {
    case DensityMethod::levy:
      if (b != 0.5) throw MethodUnavailableError("stable: the levy method needs beta = 1/2");
      return levy_half_density(x, spec.t);
    case DensityMethod::hfun:
      return via_h();
    case DensityMethod::mwright:
      return scaled(m_wright(b, spec.t * std::pow(x, -b)));
    case DensityMethod::automatic:
      break;
  }
  if (b == 0.5) return levy_half_density(x, spec.t);
  double w = spec.t * std::pow(x, -b);
  if (w <= 5.0) {
    SeriesValue s = m_wright_series(b, w);
    if (s.error <= kSeriesTrust * std::fabs(s.value)) return scaled(s.value);
  }
  return via_h();
}

double density_integral_oracle(const StableSpec& spec, double x, const QuadratureSpec& quad) {
  spec.validate();
  check_x(x);
  const double b = spec.beta;
  const double t = spec.t;
  const double cb = std::cos(b * M_PI);
  const double sb = std::sin(b * M_PI);
  auto g = [&](double u) {
    if (u <= 0.0) return 0.0;
    double ub = std::pow(u, b);
    return std::exp(-u * x - t * ub * cb) * std::sin(t * ub * sb) / M_PI;
  };
  auto zero = [&](long k) { return std::pow(k * M_PI / (t * sb), 1.0 / b); };
  std::vector<double> terms;
  double sum = 0.0;
  int quiet = 0;
  for (long k = 0; k < quad.max_intervals; ++k) {
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
    throw NonConvergedError("stable oracle: oscillatory integral did not settle",
                            lim.error / std::max(std::fabs(lim.value), 1e-300));
  }
  return lim.value;
}

double cdf(const StableSpec& spec, double x) {
  spec.validate();
  if (std::isnan(x)) throw DomainError("stable cdf: x is NaN");
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return clamp_unit(hdist_cdf(hparams(spec), x));
}

Complex mellin_x(const StableSpec& spec, Complex s) {
  spec.validate();
  const double b = spec.beta;
  if (!(s.real() < 1.0 + b)) {
    std::ostringstream os;
    os << "stable mellin_x: Re s = " << s.real() << " must be below 1 + beta = " << 1.0 + b;
    throw StripError(os.str(), -HUGE_VAL, 1.0 + b);
  }
  Complex ratio = gamma_ratio((1.0 - s) / b, 1.0 - s, PoleLimit{-1.0 / b, -1.0});
  return ratio * std::exp((s - 1.0) / b * std::log(spec.t)) / b;
}

double laplace_x(const StableSpec& spec, double s) {
  spec.validate();
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("stable laplace_x: s must be >= 0");
  return std::exp(-spec.t * std::pow(s, spec.beta));
}

double laplace_x_hchain(const StableSpec& spec, double s) {
  spec.validate();
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("stable laplace_x: s must be >= 0");
  HParams p = hparams(spec);
  double k = prefactor(spec);
  if (s == 0.0) return k * laplace_of_h(p, 0.0);
  HParams l = cancel_common_factors(laplace_params(p));
  double z = s / p.delta;
  if (l.m == 1 && l.n == 0 && l.p() == 0 && l.q() == 1) {
    return k / p.delta * exp_closed_form(z, l.lower[0].a.real(), l.lower[0].A.real());
  }
  return k / p.delta * evaluate(l, z).value.real();
}

Complex mellin_t(double beta, double x, Complex s) {
  StableSpec{beta, 1.0}.validate();
  check_x(x);
  if (!(s.real() > 0.0 && s.real() < 1.0 / beta)) {
    std::ostringstream os;
    os << "stable mellin_t: Re s = " << s.real() << " must lie in (0, " << 1.0 / beta << ")";
    throw StripError(os.str(), 0.0, 1.0 / beta);
  }
  return std::exp((beta * s - 1.0) * std::log(x)) * gamma_ratio(s, beta * s);
}

HParams laplace_t_hparams(double beta) {
  return make_hparams(1, 1, {{Coef(0), Coef(1)}},
                      {{Coef(0), Coef(1)}, {Coef(1) - Coef(beta), Coef(beta)}});
}

double laplace_t(double beta, double x, double s) {
  StableSpec{beta, 1.0}.validate();
  check_x(x);
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("stable laplace_t: s must be >= 0");
  double scale = std::pow(x, beta - 1.0);
  if (s == 0.0) return scale / std::tgamma(beta);
  return scale * evaluate(laplace_t_hparams(beta), std::pow(x, beta) * s).value.real();
}

}  // namespace stable
}  // namespace subfox
