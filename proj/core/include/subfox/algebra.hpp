#pragma once

#include <functional>
#include <vector>

#include "subfox/hfunction.hpp"
#include "subfox/quadrature.hpp"

namespace subfox {

enum class Kind { stable, inverse };

const char* kind_name(Kind k) noexcept;

// One independent factor: D_beta(t) or E_beta(t).
struct FamilyRef {
  Kind kind = Kind::stable;
  double beta = 0.5;
  double t = 1.0;

  void validate() const;
};

// density(x) = prefactor * H[params.delta * x | params] on x > 0.
struct ComposedDensity {
  double prefactor = 1.0;
  HParams params;

  double operator()(double x) const;
  // prefactor * chi(s) / delta^s.
  Complex mellin(Complex s) const;
};

// The base density of one factor in composed form.
ComposedDensity family_density(const FamilyRef& f);

// a X, a > 0.
ComposedDensity scalar_multiple(const FamilyRef& f, double a);

// X_1 X_2 ... X_n of independent factors of one kind, n >= 2.
ComposedDensity product(const std::vector<FamilyRef>& fs);

// X^r for real r != 0.
ComposedDensity rational_power(const FamilyRef& f, double r);

// X_i / X_j of independent factors of one kind.
ComposedDensity quotient(const FamilyRef& fi, const FamilyRef& fj);

enum class ConvolutionMode { product, quotient };

// product:  int d1(z/y) d2(y) dy / y
// quotient: int d1(z y) d2(y) y dy
double mellin_convolution_oracle(const std::function<double(double)>& d1,
                                 const std::function<double(double)>& d2,
                                 ConvolutionMode mode, double z,
                                 const QuadratureSpec& grid = {});

}  // namespace subfox
