#include "subfox/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "subfox/error.hpp"

namespace subfox {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kStirlingRadius = 12.0;

Complex stirling(Complex z) {
  Complex w = 1.0 / z;
  Complex w2 = w * w;
  Complex sum = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    sum = sum * w2 + *it;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + sum * w;
}

// Re z >= 0.5.
Complex log_gamma_right(Complex z) {
  if (std::abs(z) >= kStirlingRadius) return stirling(z);
  // Shift up until Stirling applies; the principal logs of z+k are on the
  // right half-plane so no branch bookkeeping is needed.
  int shift = static_cast<int>(std::ceil(kStirlingRadius - z.real()));
  Complex acc = 0.0;
  for (int k = 0; k < shift; ++k) acc += std::log(z + static_cast<double>(k));
  return stirling(z + static_cast<double>(shift)) - acc;
}

// A branch of log sin(pi z) analytic in the closed upper (lower) half plane
// whenever Im z >= 0 (< 0). Never overflows for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex i(0.0, 1.0);
  if (z.imag() >= 0.0) {
    Complex e = std::exp(2.0 * kPi * i * z);
    return -std::numbers::ln2 + i * (kPi / 2.0) - i * kPi * z + std::log(1.0 - e);
  }
  Complex e = std::exp(-2.0 * kPi * i * z);
  return -std::numbers::ln2 - i * (kPi / 2.0) + i * kPi * z + std::log(1.0 - e);
}

}  // namespace

std::optional<long> pole_index(Complex z) noexcept {
  if (std::fabs(z.imag()) > kPoleTolerance) return std::nullopt;
  double r = std::round(z.real());
  if (r > 0.0) return std::nullopt;
  if (std::fabs(z.real() - r) > kPoleTolerance) return std::nullopt;
  return static_cast<long>(-r);
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (auto k = pole_index(z)) {
    throw PoleError("log_gamma: pole at z = " + std::to_string(-*k));
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection with a log-sine branch chosen so the result stays principal.
  return kLogPi - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex reciprocal_gamma(Complex z) {
  if (pole_index(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

Complex gamma_ratio(Complex num, Complex den, std::optional<PoleLimit> limit) {
  auto kn = pole_index(num);
  auto kd = pole_index(den);
  if (kn && kd) {
    if (!limit) {
      throw IndeterminateError("gamma_ratio: both arguments at poles");
    }
    // Gamma(-k + a e) ~ (-1)^k / (k! a e)
    double log_mag = std::lgamma(static_cast<double>(*kd) + 1.0) -
                     std::lgamma(static_cast<double>(*kn) + 1.0) +
                     std::log(std::fabs(limit->den_rate)) -
                     std::log(std::fabs(limit->num_rate));
    double sign = ((*kn + *kd) % 2 == 0) ? 1.0 : -1.0;
    if ((limit->num_rate < 0) != (limit->den_rate < 0)) sign = -sign;
    return sign * std::exp(log_mag);
  }
  if (kn) throw PoleError("gamma_ratio: numerator at a pole");
  if (kd) return 0.0;
  return std::exp(log_gamma(num) - log_gamma(den));
}

}  // namespace subfox
