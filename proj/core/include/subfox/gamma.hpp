#pragma once

#include <complex>
#include <optional>

namespace subfox {

using Complex = std::complex<double>;

// Distance from a non-positive integer below which an argument counts as a
// gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

// If z lies within kPoleTolerance of a non-positive integer -k, returns k.
std::optional<long> pole_index(Complex z) noexcept;

// Principal branch of log Gamma(z). Real on the positive axis, analytic off
// the negative real axis, and satisfies log_gamma(z+1) = log_gamma(z) + log z.
// Throws PoleError at z in {0,-1,-2,...} and DomainError for non-finite z.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

// 1/Gamma(z); exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

// Rates at which num and den approach their poles: the ratio is understood
// as lim_{e->0} Gamma(num + num_rate*e) / Gamma(den + den_rate*e).
struct PoleLimit {
  double num_rate = 1.0;
  double den_rate = 1.0;
};

// Gamma(num)/Gamma(den) evaluated as exp(log_gamma(num) - log_gamma(den)).
// If den is a pole (and num is not) the ratio is 0. If both are poles the
// finite limit is returned when `limit` is supplied, otherwise
// IndeterminateError. A pole in num alone is a PoleError.
Complex gamma_ratio(Complex num, Complex den,
                    std::optional<PoleLimit> limit = std::nullopt);

}  // namespace subfox
