#pragma once

#include <optional>
#include <vector>

#include "subfox/hfunction.hpp"

namespace subfox::detail {

// If Gamma(f.alpha + f.kappa s) is singular at s, the index k of the pole.
// Uses exact rational arithmetic when s_exact and the factor are exact.
std::optional<long> singular_index(const GammaFactor& f, const Complex& s,
                                   const std::optional<Rational>& s_exact);

// log of the leading coefficient (-1)^k/(k! kappa) of the k-th pole.
Complex log_singular_coefficient(long k, double kappa);

// chi near s: singular factors replaced by their leading coefficients.
struct LocalExpansion {
  Complex log_value{0.0, 0.0};
  int num_order = 0;
  int den_order = 0;
  std::vector<std::size_t> singular_numerators;
};

// With loose=true (or s_exact set) singularities are detected by
// singular_index, otherwise by pole_index.
LocalExpansion local_expansion(const std::vector<GammaFactor>& factors,
                               const Complex& s,
                               const std::optional<Rational>& s_exact,
                               bool loose = false);

}  // namespace subfox::detail
