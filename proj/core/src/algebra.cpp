#include "subfox/algebra.hpp"

#include <cmath>
#include <sstream>

#include "subfox/error.hpp"
#include "subfox/inverse_stable.hpp"
#include "subfox/stable.hpp"

namespace subfox {

const char* kind_name(Kind k) noexcept { return k == Kind::stable ? "stable" : "inverse"; }

void FamilyRef::validate() const {
  if (kind == Kind::stable) {
    StableSpec{beta, t}.validate();
  } else {
    InverseStableSpec{beta, t}.validate();
  }
}

double ComposedDensity::operator()(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("composed density: x must be positive");
  return prefactor * eval_nonnegative(params, params.delta * x);
}

Complex ComposedDensity::mellin(Complex s) const { return prefactor * mellin_of_h(params, s); }

namespace {

// delta of one factor: t^(-1/beta) or t^(-beta).
double factor_delta(const FamilyRef& f) {
  return f.kind == Kind::stable ? std::pow(f.t, -1.0 / f.beta) : std::pow(f.t, -f.beta);
}

// Density prefactor k = delta / chi(1); chi(1) is beta for the stable
// parameters and 1 for the inverse ones.
double factor_k(const FamilyRef& f) {
  return f.kind == Kind::stable ? factor_delta(f) / f.beta : factor_delta(f);
}

void require_same_kind(const std::vector<FamilyRef>& fs) {
  for (const auto& f : fs) {
    f.validate();
    if (f.kind != fs.front().kind) {
      throw MixedKindError("products and quotients need factors of a single kind");
    }
  }
}

}  // namespace

ComposedDensity family_density(const FamilyRef& f) {
  f.validate();
  if (f.kind == Kind::stable) {
    StableSpec s{f.beta, f.t};
    return {stable::prefactor(s), stable::hparams(s)};
  }
  InverseStableSpec s{f.beta, f.t};
  return {inverse_stable::prefactor(s), inverse_stable::hparams(s)};
}

ComposedDensity scalar_multiple(const FamilyRef& f, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("scalar_multiple: a must be positive");
  ComposedDensity d = family_density(f);
  d.prefactor /= a;
  d.params.delta /= a;
  return d;
}

ComposedDensity product(const std::vector<FamilyRef>& fs) {
  if (fs.size() < 2) throw DomainError("product: needs at least two factors");
  require_same_kind(fs);
  ComposedDensity d;
  d.prefactor = 1.0;
  double delta = 1.0;
  std::vector<GammaPair> upper;
  std::vector<GammaPair> lower;
  for (const auto& f : fs) {
    d.prefactor *= factor_k(f);
    delta *= factor_delta(f);
    if (f.kind == Kind::stable) {
      Coef inv = Coef(1) / Coef(f.beta);
      upper.push_back({Coef(1) - inv, inv});
    } else {
      upper.push_back({Coef(1) - Coef(f.beta), Coef(f.beta)});
    }
    lower.push_back({Coef(0), Coef(1)});
  }
  int n = static_cast<int>(fs.size());
  if (fs.front().kind == Kind::stable) {
    d.params = make_hparams(0, n, std::move(upper), std::move(lower), delta);
  } else {
    d.params = make_hparams(n, 0, std::move(upper), std::move(lower), delta);
  }
  return d;
}

ComposedDensity rational_power(const FamilyRef& f, double r) {
  f.validate();
  if (r == 0.0 || !std::isfinite(r)) throw DomainError("rational_power: r must be nonzero");
  const Coef R(r);
  const Coef B(f.beta);
  const Coef one(1);
  ComposedDensity d;
  double delta = std::pow(factor_delta(f), r);
  if (f.kind == Kind::stable) {
    d.prefactor = delta / f.beta;
    if (r > 0.0) {
      d.params = make_hparams(0, 1, {{one - R / B, R / B}}, {{one - R, R}}, delta);
    } else {
      d.params = make_hparams(1, 0, {{R, -R}}, {{R / B, -R / B}}, delta);
    }
  } else {
    d.prefactor = delta;
    if (r > 0.0) {
      d.params = make_hparams(1, 0, {{one - R * B, R * B}}, {{one - R, R}}, delta);
    } else {
      d.params = make_hparams(0, 1, {{R, -R}}, {{R * B, -R * B}}, delta);
    }
  }
  return d;
}

ComposedDensity quotient(const FamilyRef& fi, const FamilyRef& fj) {
  require_same_kind({fi, fj});
  ComposedDensity d;
  double di = factor_delta(fi);
  double dj = factor_delta(fj);
  // Mellin transform: M_i(s) M_j(2 - s).
  d.prefactor = factor_k(fi) * factor_k(fj) / (dj * dj);
  double delta = di / dj;
  const Coef one(1);
  if (fi.kind == Kind::stable) {
    Coef ii = one / Coef(fi.beta);
    Coef ij = one / Coef(fj.beta);
    d.params = make_hparams(1, 1, {{one - ii, ii}, {Coef(-1), one}}, {{-ij, ij}, {Coef(0), one}},
                            delta);
  } else {
    Coef bi(fi.beta);
    Coef bj(fj.beta);
    d.params = make_hparams(1, 1, {{Coef(-1), one}, {one - bi, bi}}, {{Coef(0), one}, {-bj, bj}},
                            delta);
  }
  return d;
}

double mellin_convolution_oracle(const std::function<double(double)>& d1,
                                 const std::function<double(double)>& d2,
                                 ConvolutionMode mode, double z, const QuadratureSpec& grid) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("convolution oracle: z must be positive");
  std::function<double(double)> f;
  if (mode == ConvolutionMode::product) {
    f = [&](double y) {
      if (!(y > 0.0) || !std::isfinite(y)) return 0.0;
      double a = z / y;
      if (!(a > 0.0) || !std::isfinite(a)) return 0.0;
      return d1(a) * d2(y) / y;
    };
  } else {
    f = [&](double y) {
      if (!(y > 0.0) || !std::isfinite(y)) return 0.0;
      double a = z * y;
      if (!(a > 0.0) || !std::isfinite(a)) return 0.0;
      return d1(a) * d2(y) * y;
    };
  }
  // Integrate in u = log y so both ends of the half line are resolved.
  auto g = [&](double u) {
    double y = std::exp(u);
    if (y == 0.0 || !std::isfinite(y)) return 0.0;
    return f(y) * y;
  };
  QuadratureSpec q = grid;
  Integral left = integrate_tail([&](double v) { return g(-v); }, 0.0, q);
  Integral right = integrate_tail(g, 0.0, q);
  return left.value + right.value;
}

}  // namespace subfox
