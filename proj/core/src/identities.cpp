#include <cmath>
#include <sstream>

#include "subfox/error.hpp"
#include "subfox/hfunction.hpp"

namespace subfox {

HParams reciprocal_argument(const HParams& params) {
  params.validate();
  HParams out;
  out.m = params.n;
  out.n = params.m;
  out.delta = params.delta;
  const Coef one(1.0);
  for (const auto& e : params.lower) out.upper.push_back({one - e.a, e.A});
  for (const auto& e : params.upper) out.lower.push_back({one - e.a, e.A});
  return out;
}

std::pair<double, HParams> power_argument(const HParams& params, Coef sigma) {
  params.validate();
  if (!sigma.is_real() || !(sigma.real() > 0.0)) {
    throw NonPositiveSigmaError("power_argument: sigma must be positive, got " + sigma.str());
  }
  HParams out = params;
  for (auto& e : out.upper) e.A = e.A / sigma;
  for (auto& e : out.lower) e.A = e.A / sigma;
  return {1.0 / sigma.real(), out};
}

HParams shift_multiplier(const HParams& params, Coef rho) {
  params.validate();
  HParams out = params;
  for (auto& e : out.upper) e.a = e.a + rho * e.A;
  for (auto& e : out.lower) e.a = e.a + rho * e.A;
  return out;
}

DerivativeForm derivative_params(const HParams& params, Coef rho, Coef sigma, double lam,
                                 int k) {
  params.validate();
  if (k < 1) throw DomainError("derivative_params: order k must be at least 1");
  if (!sigma.is_real() || !(sigma.real() > 0.0)) {
    throw NonPositiveSigmaError("derivative_params: sigma must be positive");
  }
  if (!(lam > 0.0)) throw DomainError("derivative_params: lambda must be positive");
  const Coef one(1.0);
  DerivativeForm d;
  d.sign = k % 2 == 0 ? 1 : -1;
  d.power_shift = rho - Coef(k) - one;
  d.params = params;
  d.params.m += 1;
  d.params.upper.push_back({one - rho, sigma});
  d.params.lower.insert(d.params.lower.begin(), {one - rho + Coef(k), sigma});
  return d;
}

HParams cancel_common_factors(const HParams& params) {
  params.validate();
  HParams out = params;
  // Gamma(b + B s) over Gamma(a + A s) with (a,A) = (b,B).
  for (int j = 0; j < out.m;) {
    bool removed = false;
    for (int i = out.n; i < out.p(); ++i) {
      if (out.lower[static_cast<std::size_t>(j)] == out.upper[static_cast<std::size_t>(i)]) {
        out.lower.erase(out.lower.begin() + j);
        out.upper.erase(out.upper.begin() + i);
        --out.m;
        removed = true;
        break;
      }
    }
    if (!removed) ++j;
  }
  // Gamma(1 - a - A s) over Gamma(1 - b - B s) with (a,A) = (b,B).
  for (int i = 0; i < out.n;) {
    bool removed = false;
    for (int j = out.m; j < out.q(); ++j) {
      if (out.upper[static_cast<std::size_t>(i)] == out.lower[static_cast<std::size_t>(j)]) {
        out.upper.erase(out.upper.begin() + i);
        out.lower.erase(out.lower.begin() + j);
        --out.n;
        removed = true;
        break;
      }
    }
    if (!removed) ++i;
  }
  return out;
}

double exp_closed_form(double z, double b, double B) {
  if (!(z > 0.0)) throw DomainError("exp_closed_form: z must be positive");
  if (!(B > 0.0)) throw DomainError("exp_closed_form: B must be positive");
  return std::exp((b / B) * std::log(z) - std::pow(z, 1.0 / B)) / B;
}

HParams exp_closed_form_params(Coef b, Coef B) { return make_hparams(1, 0, {}, {{b, B}}); }

namespace {

void require_distribution(const HParams& params) {
  params.validate();
  if (!(params.delta > 0.0)) {
    throw DomainError("H-distribution: delta must be positive");
  }
}

void require_in_strip(const HParams& params, Complex s, const char* what) {
  auto layout = pole_layout(params);
  if (!(s.real() > layout.strip_lo && s.real() < layout.strip_hi)) {
    std::ostringstream os;
    os << what << ": Re s = " << s.real() << " is outside the strip (" << layout.strip_lo
       << ", " << layout.strip_hi << ")";
    throw StripError(os.str(), layout.strip_lo, layout.strip_hi);
  }
}

}  // namespace

Complex mellin_of_h(const HParams& params, Complex s) {
  require_distribution(params);
  require_in_strip(params, s, "mellin_of_h");
  return chi(params, s) * std::exp(-s * std::log(params.delta));
}

HParams laplace_params(const HParams& params) {
  params.validate();
  HParams out;
  out.m = params.n + 1;
  out.n = params.m;
  out.delta = 1.0;
  const Coef one(1.0);
  for (const auto& e : params.lower) out.upper.push_back({one - e.a - e.A, e.A});
  out.lower.push_back({Coef(0), Coef(1)});
  for (const auto& e : params.upper) out.lower.push_back({one - e.a - e.A, e.A});
  return out;
}

double laplace_of_h(const HParams& params, double s, const EvalOptions& options) {
  require_distribution(params);
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw DomainError("laplace_of_h: s must be non-negative and finite");
  }
  if (s == 0.0) {
    require_in_strip(params, 1.0, "laplace_of_h");
    return chi(params, 1.0).real() / params.delta;
  }
  return evaluate(laplace_params(params), s / params.delta, options).value.real() /
         params.delta;
}

double hdist_normalizer(const HParams& params) {
  require_distribution(params);
  require_in_strip(params, 1.0, "hdist_normalizer");
  double c1 = chi(params, 1.0).real();
  if (c1 == 0.0 || !std::isfinite(c1)) {
    throw DomainError("hdist_normalizer: chi(1) is not a finite nonzero number");
  }
  return params.delta / c1;
}

double hdist_density(const HParams& params, double x, const EvalOptions& options) {
  double k = hdist_normalizer(params);
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("hdist_density: x must be non-negative and finite");
  }
  return k * evaluate(params, params.delta * x, options).value.real();
}

HParams hdist_cdf_params(const HParams& params) {
  require_distribution(params);
  for (int j = 0; j < params.m; ++j) {
    const auto& e = params.lower[static_cast<std::size_t>(j)];
    if (!(-e.a.real() / e.A.real() < 1.0)) {
      std::ostringstream os;
      os << "hdist_cdf_params: -b_" << (j + 1) << "/B_" << (j + 1) << " = "
         << -e.a.real() / e.A.real() << " is not below 1";
      throw ProvisoViolatedError(os.str());
    }
  }
  HParams out;
  out.m = params.m;
  out.n = params.n + 1;
  out.delta = params.delta;
  out.upper.push_back({Coef(1), Coef(1)});
  for (const auto& e : params.upper) out.upper.push_back({e.a + e.A, e.A});
  for (const auto& e : params.lower) out.lower.push_back({e.a + e.A, e.A});
  out.lower.push_back({Coef(0), Coef(1)});
  return out;
}

double hdist_cdf(const HParams& params, double x, const EvalOptions& options) {
  HParams f = hdist_cdf_params(params);
  if (!(x >= 0.0) && !std::isnan(x)) return 0.0;
  if (std::isnan(x)) throw DomainError("hdist_cdf: x is NaN");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  double c1 = chi(params, 1.0).real();
  return evaluate(cancel_common_factors(f), params.delta * x, options).value.real() / c1;
}

}  // namespace subfox
