#include "subfox/wright.hpp"

#include <cmath>
#include <sstream>

#include "subfox/error.hpp"

namespace subfox {

namespace {

// log|Gamma(x)| and its sign for real x; nullopt at a pole.
struct LogGammaReal {
  long double log_abs;
  int sign;
};

std::optional<LogGammaReal> log_gamma_real(long double x) {
  long double r = std::round(x);
  if (x <= 0.0L && std::fabs(x - r) < 1e-14L * std::max(1.0L, std::fabs(x))) {
    return std::nullopt;
  }
  int sign = 1;
  long double v = ::lgammal_r(x, &sign);
  return LogGammaReal{v, sign};
}

void check_pairs(const std::vector<WrightPair>& v) {
  for (const auto& p : v) {
    if (p.alpha == 0.0 || !std::isfinite(p.alpha) || !std::isfinite(p.a)) {
      throw DomainError("Wright parameters: every rate must be finite and nonzero");
    }
  }
}

struct Kahan {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double x) {
    long double y = x - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

SeriesValue generalized_wright_series(const WrightParams& params, double z, double tol,
                                      int max_terms) {
  check_pairs(params.upper);
  check_pairs(params.lower);
  if (!std::isfinite(z)) throw DomainError("generalized_wright: z must be finite");
  SeriesValue out;
  Kahan acc;
  long double abs_sum = 0.0L;
  long double last = -1.0L;
  int growth = 0;
  int quiet = 0;
  int zero_run = 0;
  const long double log_z = z != 0.0 ? std::log(std::fabs(static_cast<long double>(z))) : 0.0L;
  for (int n = 0; n < max_terms; ++n) {
    ++out.terms;
    long double log_t = -::lgammal(static_cast<long double>(n) + 1.0L);
    int sign = (z < 0.0 && n % 2 == 1) ? -1 : 1;
    bool zero = false;
    if (z == 0.0 && n > 0) zero = true;
    if (n > 0) log_t += n * log_z;
    for (const auto& p : params.upper) {
      auto g = log_gamma_real(p.a + p.alpha * static_cast<long double>(n));
      if (!g) {
        std::ostringstream os;
        os << "generalized_wright: upper gamma pole at term " << n;
        throw DomainError(os.str());
      }
      log_t += g->log_abs;
      sign *= g->sign;
    }
    for (const auto& p : params.lower) {
      auto g = log_gamma_real(p.a + p.alpha * static_cast<long double>(n));
      if (!g) {
        zero = true;
        break;
      }
      log_t -= g->log_abs;
      sign *= g->sign;
    }
    if (zero) {
      if (z == 0.0) break;
      // A long run of reciprocal-gamma zeros means the remaining terms vanish.
      if (++zero_run >= 32) {
        out.value = static_cast<double>(acc.sum);
        out.error = static_cast<double>(1e-18L * abs_sum);
        return out;
      }
      continue;
    }
    zero_run = 0;
    if (log_t > 11000.0L) throw DivergentSeriesError("generalized_wright: terms overflow");
    long double t = sign * std::exp(log_t);
    acc.add(t);
    abs_sum += std::fabs(t);
    long double mag = std::fabs(t);
    if (last >= 0.0L && mag > last) {
      if (++growth >= 50) throw DivergentSeriesError("generalized_wright: terms keep growing");
    } else {
      growth = 0;
    }
    last = mag;
    if (mag <= tol * std::fabs(acc.sum)) {
      if (++quiet >= 2) {
        out.value = static_cast<double>(acc.sum);
        out.error = static_cast<double>(mag + 1e-18L * abs_sum);
        return out;
      }
    } else {
      quiet = 0;
    }
  }
  if (z == 0.0) {
    out.value = static_cast<double>(acc.sum);
    return out;
  }
  throw DivergentSeriesError("generalized_wright: no convergence within the term limit");
}

double generalized_wright(const WrightParams& params, double z, double tol) {
  return generalized_wright_series(params, z, tol).value;
}

HParams wright_hparams(const WrightParams& params) {
  check_pairs(params.upper);
  check_pairs(params.lower);
  std::vector<GammaPair> m_type{{Coef(0), Coef(1)}};
  std::vector<GammaPair> n_type;
  std::vector<GammaPair> p_type;
  std::vector<GammaPair> q_type;
  for (const auto& p : params.upper) {
    if (p.alpha > 0.0) {
      n_type.push_back({Coef(1) - Coef(p.a), Coef(p.alpha)});
    } else {
      m_type.push_back({Coef(p.a), Coef(-p.alpha)});
    }
  }
  for (const auto& p : params.lower) {
    if (p.alpha > 0.0) {
      q_type.push_back({Coef(1) - Coef(p.a), Coef(p.alpha)});
    } else {
      p_type.push_back({Coef(p.a), Coef(-p.alpha)});
    }
  }
  int m = static_cast<int>(m_type.size());
  int n = static_cast<int>(n_type.size());
  std::vector<GammaPair> upper = n_type;
  upper.insert(upper.end(), p_type.begin(), p_type.end());
  std::vector<GammaPair> lower = m_type;
  lower.insert(lower.end(), q_type.begin(), q_type.end());
  return make_hparams(m, n, std::move(upper), std::move(lower));
}

double wright_mellin_barnes(const WrightParams& params, double x,
                            const std::optional<ContourSpec>& contour) {
  if (!(x > 0.0)) throw DomainError("wright_mellin_barnes: x must be positive");
  return eval(wright_hparams(params), x, contour);
}

WrightParams m_wright_params(double beta) { return WrightParams{{}, {{1.0 - beta, -beta}}}; }

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("M-Wright: beta must lie in (0, 1)");
}

}  // namespace

SeriesValue m_wright_series(double beta, double z, int max_terms) {
  check_beta(beta);
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("M-Wright: z must be >= 0");
  SeriesValue out;
  Kahan acc;
  const long double b = beta;
  const long double pi = 3.141592653589793238462643383279502884L;
  long double abs_sum = 0.0L;
  long double log_z = z > 0.0 ? std::log(static_cast<long double>(z)) : 0.0L;
  int quiet = 0;
  for (int n = 0; n < max_terms; ++n) {
    ++out.terms;
    // 1/Gamma(1 - b(n+1)) = Gamma(b(n+1)) sin(pi b(n+1)) / pi
    long double y = b * (n + 1);
    // sin(pi y) from the exact distance to the nearest integer, so terms
    // next to a pole of Gamma(1 - y) keep their (tiny) value.
    long double frac = std::fmod(y, 2.0L);
    long double r = std::round(frac);
    long double d = frac - r;
    if (d == 0.0L) continue;
    long double sn = (r == 1.0L ? -1.0L : 1.0L) * std::sin(pi * d);
    long double log_t = ::lgammal(y) - ::lgammal(n + 1.0L) + (n > 0 ? n * log_z : 0.0L);
    if (z == 0.0 && n > 0) break;
    if (log_t > 700.0L) break;  // cancellation would swamp double precision
    long double t = ((n % 2) ? -1.0L : 1.0L) * std::exp(log_t) * sn / pi;
    acc.add(t);
    // exp() of a large log carries a relative error near |log_t| ulps.
    abs_sum += std::fabs(t) * (4.0L + std::fabs(log_t));
    if (z == 0.0) break;
    // Terms decay monotonically once n^(1-b) dominates z; stop after two
    // consecutive negligible magnitudes past that point.
    long double bound = std::exp(log_t) / pi;
    if (bound <= 1e-19L * std::fabs(acc.sum) && n > 2) {
      if (++quiet >= 2) {
        out.value = static_cast<double>(acc.sum);
        out.error = static_cast<double>(bound + 1.1e-19L * abs_sum) +
                    1.2e-16 * std::fabs(out.value);
        return out;
      }
    } else {
      quiet = 0;
    }
  }
  out.value = static_cast<double>(acc.sum);
  if (z == 0.0) {
    out.error = 4e-19 * std::fabs(out.value);
    return out;
  }
  out.error = HUGE_VAL;
  return out;
}

double m_wright(double beta, double z) {
  check_beta(beta);
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("M-Wright: z must be >= 0");
  if (z <= 50.0) {
    SeriesValue s = m_wright_series(beta, z);
    if (s.error <= 1e-13 * std::fabs(s.value)) return s.value;
  }
  double v = wright_mellin_barnes(m_wright_params(beta), z);
  return v < 0.0 ? 0.0 : v;
}

}  // namespace subfox
