#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subfox/gamma.hpp"
#include "subfox/rational.hpp"

namespace subfox {

// One (a_i, A_i) or (b_j, B_j) entry of an H-function.
struct GammaPair {
  Coef a;
  Coef A;

  friend bool operator==(const GammaPair&, const GammaPair&) = default;
};

// Parameters of H^{m,n}_{p,q}[z | (a_i,A_i)_{1,p}; (b_j,B_j)_{1,q}].
//
// The first n upper entries contribute Gamma(1 - a_i - A_i s) to the
// numerator of chi(s), the remaining p - n contribute Gamma(a_i + A_i s) to
// the denominator. The first m lower entries contribute Gamma(b_j + B_j s)
// to the numerator, the remaining q - m contribute Gamma(1 - b_j - B_j s) to
// the denominator.
//
// `delta` is the scale of the H-distribution k*H(delta*x). It only enters
// the distribution operations (normalizer, Mellin/Laplace transforms, CDF);
// `eval` computes H(z) itself.
struct HParams {
  int m = 0;
  int n = 0;
  std::vector<GammaPair> upper;
  std::vector<GammaPair> lower;
  double delta = 1.0;

  int p() const noexcept { return static_cast<int>(upper.size()); }
  int q() const noexcept { return static_cast<int>(lower.size()); }

  // Throws DomainError unless 0<=m<=q, 0<=n<=p, all A,B > 0 and delta != 0.
  void validate() const;
  bool is_real() const noexcept;
  std::string str() const;

  friend bool operator==(const HParams&, const HParams&) = default;
};

HParams make_hparams(int m, int n, std::vector<GammaPair> upper,
                     std::vector<GammaPair> lower, double delta = 1.0);

// Gamma(alpha + kappa*s) in the numerator or denominator of chi(s).
struct GammaFactor {
  Coef alpha;
  Coef kappa;
  bool numerator = true;
};

std::vector<GammaFactor> gamma_factors(const HParams& params);

// chi(s): the four-product gamma ratio. Empty products are 1. Where
// numerator and denominator singularities coincide the finite limit is
// returned (zero when the denominator dominates). Throws PoleError naming
// the singular factor when s is a genuine pole.
Complex chi(const HParams& params, Complex s);

// log chi(s) with no special handling at singular points.
Complex log_chi(const HParams& params, Complex s);

struct Pole {
  Complex s;
  std::optional<Rational> exact;
  int order = 1;
};

struct PoleLayout {
  std::vector<Pole> left_poles;   // from Gamma(b_j + B_j s), j <= m
  std::vector<Pole> right_poles;  // from Gamma(1 - a_i - A_i s), i <= n
  // Numerator singularities cancelled by the denominator; finite points of
  // chi that the contour should still not pass through exactly.
  std::vector<Pole> removable;
  // Zeros of chi from denominator gammas.
  std::vector<Pole> zeros;
  double strip_lo = -HUGE_VAL;
  double strip_hi = HUGE_VAL;
};

// Enumerates the first `per_factor` poles of every numerator gamma and
// classifies them. With cancel_removable=false every numerator singularity is
// reported as a pole, even where a denominator gamma cancels it.
// Throws EmptyStripError when no vertical line separates the two families.
PoleLayout pole_layout(const HParams& params, int per_factor = 64,
                       bool cancel_removable = true);

// Mellin-Barnes contour: Re s = c, truncated to |Im s| <= half_height,
// `nodes` trapezoid intervals across [-half_height, half_height]. With
// adaptive=true half_height and nodes are starting values only.
struct ContourSpec {
  double c = 0.0;
  double half_height = 16.0;
  int nodes = 256;
  bool adaptive = true;
};

enum class Route { automatic, quadrature, residue_left, residue_right };

const char* route_name(Route r) noexcept;

struct EvalOptions {
  std::optional<ContourSpec> contour;
  Route route = Route::automatic;
  double rel_tol = 1e-12;
  double max_half_height = 16384.0;
  int max_refinements = 8;
  int max_series_terms = 4000;
};

struct Evaluation {
  Complex value;
  double error_estimate = 0.0;
  Route route = Route::quadrature;
  double c = 0.0;
  double half_height = 0.0;
  long evaluations = 0;
};

// The contour abscissa used when none is supplied: the real-axis saddle of
// |chi(s) z^-s| inside the admissible strip, kept clear of poles.
double default_abscissa(const HParams& params, double z);

// H(z) for z > 0 by the Mellin-Barnes integral along Re s = c (or by a
// residue series, depending on options.route). Automatic routing falls back
// to the residue series when the quadrature fails to converge.
Evaluation evaluate(const HParams& params, double z, const EvalOptions& options = {});

// Complex-valued H(z) by quadrature (needed when coefficients are complex).
Complex eval_complex(const HParams& params, double z,
                     const std::optional<ContourSpec>& contour = std::nullopt);

// Real H(z) by quadrature. Throws NonConvergedError if the imaginary part is
// not below 1e-8 (1 + |real part|).
double eval(const HParams& params, double z,
            const std::optional<ContourSpec>& contour = std::nullopt);

// evaluate() for quantities known to be non-negative (densities): a negative
// result within its own error estimate is returned as 0, a clearly negative
// one raises NonConvergedError.
double eval_nonnegative(const HParams& params, double z, const EvalOptions& options = {});

enum class Side { left, right };

struct SeriesResult {
  double value = 0.0;
  double imag = 0.0;
  double truncation_bound = 0.0;
  double rounding_bound = 0.0;
  int terms = 0;
};

// Residue expansion of H(z) over the left (z small) or right (z large) pole
// family. z = 0 is admitted for the left family.
SeriesResult eval_residue_series(const HParams& params, double z, Side side,
                                 int max_terms = 4000, double tol = 1e-16);

// ---------------------------------------------------------------------------
// Parameter rewrites.

// H[1/z | params] = H[z | result].
HParams reciprocal_argument(const HParams& params);

// H[z^sigma | params] = prefactor * H[z | result].
std::pair<double, HParams> power_argument(const HParams& params, Coef sigma);

// z^rho H[z | params] = H[z | result].
HParams shift_multiplier(const HParams& params, Coef rho);

struct DerivativeForm {
  int sign = 1;          // (-1)^k
  Coef power_shift;      // rho - k - 1
  HParams params;        // evaluated at lambda*z^sigma
};

// d^k/dz^k z^(rho-1) H[lam z^sigma | params]
//   = sign * z^power_shift * H[lam z^sigma | result.params].
DerivativeForm derivative_params(const HParams& params, Coef rho, Coef sigma,
                                 double lam, int k);

// Removes numerator/denominator gamma pairs that are identical as functions
// of s (compared exactly), adjusting m and n.
HParams cancel_common_factors(const HParams& params);

// (1/B) z^(b/B) exp(-z^(1/B)) = H^{1,0}_{0,1}[z | -; (b,B)].
double exp_closed_form(double z, double b, double B);
HParams exp_closed_form_params(Coef b, Coef B);

// ---------------------------------------------------------------------------
// H-distribution k*H(delta*x).

// chi(s)/delta^s.
Complex mellin_of_h(const HParams& params, Complex s);

// Parameters of the Laplace transform: L[H(delta x)](s) = (1/delta) H[s/delta | result].
HParams laplace_params(const HParams& params);

// The Laplace transform of H(delta x) at s >= 0.
double laplace_of_h(const HParams& params, double s, const EvalOptions& options = {});

// k = delta/chi(1). Throws DomainError if chi(1) vanishes.
double hdist_normalizer(const HParams& params);

// k*H(delta*x).
double hdist_density(const HParams& params, double x, const EvalOptions& options = {});

// Parameters F such that CDF(x) = H[delta x | F] / chi(1).
// Throws ProvisoViolatedError unless -b_j/B_j < 1 for all j <= m.
HParams hdist_cdf_params(const HParams& params);

double hdist_cdf(const HParams& params, double x, const EvalOptions& options = {});

}  // namespace subfox
