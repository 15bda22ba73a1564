#include <gtest/gtest.h>

#include <cmath>

#include "subfox/error.hpp"
#include "subfox/hfunction.hpp"
#include "subfox/inverse_stable.hpp"
#include "subfox/stable.hpp"
#include "support.hpp"

using namespace subfox;
using subfox::testing::integral;
using subfox::testing::levy;
using subfox::testing::rel_err;
using subfox::testing::uniform;

namespace {

HParams levy_params() { return stable::hparams({0.5, 1.0}); }

HParams exp_params() { return make_hparams(1, 0, {}, {{Coef(0), Coef(1)}}); }

// H^{1,1}_{1,1}[z | (1-a,1); (0,1)] = Gamma(a) (1+z)^(-a).
HParams beta_prime(double a) { return make_hparams(1, 1, {{Coef(1) - Coef(a), Coef(1)}}, {{Coef(0), Coef(1)}}); }

double beta_prime_value(double a, double z) { return std::tgamma(a) * std::pow(1.0 + z, -a); }

// Multiples of 1/1024, so every coefficient carries an exact rational.
double grid(double lo, double hi) { return std::round(uniform(lo, hi) * 1024.0) / 1024.0; }

// H^{1,1}_{2,2} with a positive vertical decay rate and a non-empty strip.
HParams random_h22() {
  double b1 = grid(0.0, 1.0);
  double B1 = grid(0.8, 1.5);
  double b2 = grid(-0.5, 0.5);
  double B2 = grid(0.1, 0.5);
  double a1 = grid(-0.5, 0.5);
  double A1 = grid(0.8, 1.5);
  double a2 = grid(-0.5, 0.5);
  double A2 = grid(0.1, 0.5);
  return make_hparams(1, 1, {{Coef(a1), Coef(A1)}, {Coef(a2), Coef(A2)}},
                      {{Coef(b1), Coef(B1)}, {Coef(b2), Coef(B2)}});
}

}  // namespace

TEST(HParams, ValidateRejectsBadOrders) {
  EXPECT_THROW(make_hparams(2, 0, {}, {{Coef(0), Coef(1)}}), DomainError);
  EXPECT_THROW(make_hparams(0, 1, {}, {}), DomainError);
  EXPECT_THROW(make_hparams(1, 0, {}, {{Coef(0), Coef(-1)}}), DomainError);
  EXPECT_THROW(make_hparams(1, 0, {}, {{Coef(0), Coef(1)}}, 0.0), DomainError);
  EXPECT_NO_THROW(make_hparams(0, 0, {}, {}));
}

TEST(Chi, Examples) {
  EXPECT_NEAR(chi(levy_params(), 0.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(chi(make_hparams(0, 0, {}, {}), Complex(0.3, 2.0)).real(), 1.0, 0.0);
  EXPECT_NEAR(chi(levy_params(), 0.5).real(), 0.5641895835477563, 1e-14);
}

TEST(Chi, RemovableLimitAtOne) {
  // Gamma(2 - 2s)/Gamma(1 - s) -> 1/2 as s -> 1.
  EXPECT_NEAR(chi(levy_params(), 1.0).real(), 0.5, 1e-12);
}

TEST(Chi, PoleErrorNamesFactor) {
  try {
    chi(levy_params(), 1.5);
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("Gamma("), std::string::npos) << e.what();
  }
}

TEST(PoleLayout, StableRawMatchesEnumeratedPoles) {
  PoleLayout raw = pole_layout(levy_params(), 8, false);
  ASSERT_GE(raw.right_poles.size(), 3u);
  EXPECT_NEAR(raw.right_poles[0].s.real(), 1.0, 1e-15);
  EXPECT_NEAR(raw.right_poles[1].s.real(), 1.5, 1e-15);
  EXPECT_NEAR(raw.right_poles[2].s.real(), 2.0, 1e-15);
  EXPECT_TRUE(raw.left_poles.empty());
  EXPECT_EQ(raw.strip_lo, -HUGE_VAL);
  EXPECT_DOUBLE_EQ(raw.strip_hi, 1.0);
}

TEST(PoleLayout, StableCancellationAwareStrip) {
  PoleLayout l = pole_layout(levy_params());
  EXPECT_DOUBLE_EQ(l.strip_hi, 1.5);
  EXPECT_NEAR(l.removable.front().s.real(), 1.0, 1e-15);
}

TEST(PoleLayout, InverseStable) {
  PoleLayout l = pole_layout(inverse_stable::hparams({0.6, 1.0}), 4);
  ASSERT_EQ(l.left_poles.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(l.left_poles[static_cast<std::size_t>(k)].s.real(), -k, 1e-15);
  // At beta = 1/2 the odd poles of Gamma(s) cancel against Gamma(1/2 + s/2).
  PoleLayout h = pole_layout(inverse_stable::hparams({0.5, 1.0}), 4);
  ASSERT_EQ(h.left_poles.size(), 2u);
  EXPECT_NEAR(h.left_poles[0].s.real(), 0.0, 1e-15);
  EXPECT_NEAR(h.left_poles[1].s.real(), -2.0, 1e-15);
  EXPECT_DOUBLE_EQ(l.strip_lo, 0.0);
  EXPECT_EQ(l.strip_hi, HUGE_VAL);
}

TEST(PoleLayout, EmptyFamilies) {
  PoleLayout l = pole_layout(make_hparams(0, 0, {}, {}));
  EXPECT_EQ(l.strip_lo, -HUGE_VAL);
  EXPECT_EQ(l.strip_hi, HUGE_VAL);
}

TEST(PoleLayout, OverlapRaisesEmptyStrip) {
  // Gamma(s) Gamma(-1 - s): both families contain s = -1 and s = 0.
  HParams h = make_hparams(1, 1, {{Coef(2), Coef(1)}}, {{Coef(0), Coef(1)}});
  EXPECT_THROW(pole_layout(h), EmptyStripError);
  EXPECT_THROW(eval(h, 1.0), EmptyStripError);
}

TEST(Eval, ClosedFormExamples) {
  EXPECT_NEAR(eval(exp_params(), 1.0), std::exp(-1.0), 1e-12);
  EXPECT_LT(rel_err(2.0 * eval(levy_params(), 1.0), 0.21969564473386122), 1e-10);
  EXPECT_LT(rel_err(eval(inverse_stable::hparams({0.5, 1.0}), 1.0), std::exp(-0.25) / std::sqrt(M_PI)), 1e-10);
}

TEST(Eval, BetaPrimeFamily) {
  for (int i = 0; i < 20; ++i) {
    double a = uniform(0.2, 3.0);
    double z = std::exp(uniform(-3.0, 3.0));
    EXPECT_LT(rel_err(eval(beta_prime(a), z), beta_prime_value(a, z)), 1e-10) << a << " " << z;
  }
}

TEST(Eval, ContourOutsideStripRaises) {
  ContourSpec c;
  c.c = 2.0;
  EXPECT_THROW(eval(levy_params(), 1.0, c), ContourError);
  c.c = 0.5;
  EXPECT_LT(rel_err(2.0 * eval(levy_params(), 1.0, c), levy(1.0, 1.0)), 1e-10);
}

TEST(Eval, NonPositiveArgumentRaises) {
  // z = 0 is the limit of the left residue series; negative z is rejected.
  EXPECT_EQ(eval(levy_params(), 0.0), 0.0);
  EXPECT_NEAR(eval(inverse_stable::hparams({0.5, 1.0}), 0.0), 1.0 / std::sqrt(M_PI), 1e-14);
  EXPECT_THROW(eval(levy_params(), -1.0), DomainError);
  EXPECT_THROW(eval(levy_params(), HUGE_VAL), DomainError);
}

TEST(Eval, ConjugateSymmetryForRealParameters) {
  for (int i = 0; i < 10; ++i) {
    HParams h = random_h22();
    double z = std::exp(uniform(-2.0, 2.0));
    Complex v = eval_complex(h, z);
    EXPECT_LT(std::fabs(v.imag()), 1e-8 * (1.0 + std::fabs(v.real()))) << h.str();
  }
}

TEST(Eval, ReportsRouteAndError) {
  Evaluation e = evaluate(levy_params(), 1.0);
  EXPECT_EQ(e.route, Route::quadrature);
  EXPECT_GT(e.evaluations, 0);
  EXPECT_LT(e.error_estimate, 1e-12);
  EXPECT_LT(e.c, 1.5);
}

TEST(ResidueSeries, Examples) {
  SeriesResult r = eval_residue_series(levy_params(), 1.0, Side::right);
  EXPECT_LT(rel_err(2.0 * r.value, levy(1.0, 1.0)), 1e-8);
  EXPECT_GT(r.terms, 1);
  SeriesResult l = eval_residue_series(exp_params(), 2.0, Side::left);
  EXPECT_NEAR(l.value, std::exp(-2.0), 1e-14);
}

TEST(ResidueSeries, DegenerateSingleResidue) {
  // Gamma(s)/Gamma(1+s) = 1/s: only the pole at 0 survives.
  HParams h = make_hparams(1, 0, {{Coef(1), Coef(1)}}, {{Coef(0), Coef(1)}});
  SeriesResult r = eval_residue_series(h, 0.5, Side::left);
  EXPECT_NEAR(r.value, 1.0, 1e-14);
}

TEST(ResidueSeries, BetaPrimeBothSides) {
  EXPECT_LT(rel_err(eval_residue_series(beta_prime(1.7), 0.4, Side::left).value, beta_prime_value(1.7, 0.4)), 1e-12);
  EXPECT_LT(rel_err(eval_residue_series(beta_prime(1.7), 3.0, Side::right).value, beta_prime_value(1.7, 3.0)), 1e-12);
}

TEST(ResidueSeries, DivergenceDetected) {
  EXPECT_THROW(eval_residue_series(beta_prime(1.7), 3.0, Side::left), DivergentSeriesError);
}

TEST(ResidueSeries, CoincidentPolesDetected) {
  HParams h = make_hparams(2, 0, {}, {{Coef(0), Coef(1)}, {Coef(0), Coef(1)}});
  EXPECT_THROW(eval_residue_series(h, 0.5, Side::left), CoincidentPolesError);
}

TEST(ResidueSeries, AgreesWithQuadrature) {
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    HParams h = random_h22();
    double z = std::exp(uniform(-2.5, 0.0));
    SeriesResult s;
    try {
      s = eval_residue_series(h, z, Side::left);
    } catch (const DivergentSeriesError&) {
      continue;
    }
    EvalOptions o;
    o.route = Route::quadrature;
    double q = evaluate(h, z, o).value.real();
    EXPECT_LT(rel_err(s.value, q), 1e-7) << h.str() << " z=" << z;
    ++compared;
  }
  EXPECT_GE(compared, 10);
}

TEST(Identities, ReciprocalIsInvolution) {
  for (int i = 0; i < 5; ++i) {
    HParams h = random_h22();
    EXPECT_EQ(reciprocal_argument(reciprocal_argument(h)), h);
    double z = std::exp(uniform(-1.5, 1.5));
    EXPECT_LT(rel_err(eval(reciprocal_argument(h), z), eval(h, 1.0 / z)), 1e-9) << h.str();
  }
  EXPECT_NEAR(eval(reciprocal_argument(exp_params()), 1.0), std::exp(-1.0), 1e-12);
}

TEST(Identities, ReciprocalOfStableGivesH10Form) {
  HParams r = reciprocal_argument(levy_params());
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.n, 0);
  EXPECT_EQ(r.p(), 1);
  EXPECT_EQ(r.q(), 1);
  EXPECT_EQ(r.lower[0], (GammaPair{Coef(2), Coef(2)}));
  EXPECT_EQ(r.upper[0], (GammaPair{Coef(1), Coef(1)}));
}

TEST(Identities, PowerArgument) {
  auto [k1, same] = power_argument(levy_params(), Coef(1));
  EXPECT_EQ(k1, 1.0);
  EXPECT_EQ(same, levy_params());
  auto [ka, a] = power_argument(levy_params(), Coef(1.5));
  auto [kb, b] = power_argument(a, Coef(1) / Coef(1.5));
  EXPECT_DOUBLE_EQ(ka * kb, 1.0);
  EXPECT_EQ(b, levy_params());
  EXPECT_THROW(power_argument(levy_params(), Coef(0)), NonPositiveSigmaError);
  EXPECT_THROW(power_argument(levy_params(), Coef(-2)), NonPositiveSigmaError);
  for (int i = 0; i < 10; ++i) {
    HParams h = random_h22();
    double sigma = uniform(0.5, 2.0);
    double z = std::exp(uniform(-1.0, 1.0));
    auto [k, p] = power_argument(h, Coef::inexact(sigma));
    EXPECT_LT(rel_err(k * eval(p, z), eval(h, std::pow(z, sigma))), 1e-8) << h.str();
  }
}

TEST(Identities, PowerOnStableGivesXBetaForm) {
  // sigma = beta divides every coefficient by beta; the prefactor is 1/beta.
  auto [k, p] = power_argument(levy_params(), Coef(0.5));
  EXPECT_DOUBLE_EQ(k, 2.0);
  EXPECT_EQ(p.upper[0].A, Coef(4));
  EXPECT_EQ(p.lower[0].A, Coef(2));
}

TEST(Identities, ShiftMultiplier) {
  EXPECT_EQ(shift_multiplier(levy_params(), Coef(0)), levy_params());
  HParams s = shift_multiplier(exp_params(), Coef(1.5));
  EXPECT_LT(rel_err(eval(s, 2.0), std::pow(2.0, 1.5) * eval(exp_params(), 2.0)), 1e-10);
  for (int i = 0; i < 20; ++i) {
    HParams h = random_h22();
    double rho = uniform(-1.0, 1.0);
    double z = std::exp(uniform(-1.5, 1.5));
    double lhs = eval(shift_multiplier(h, Coef::inexact(rho)), z);
    double rhs = std::pow(z, rho) * eval(h, z);
    EXPECT_LT(rel_err(lhs, rhs), 1e-7) << h.str() << " rho=" << rho << " z=" << z;
  }
}

TEST(Identities, ShiftTurnsOneOneIntoZeroOneForm) {
  HParams h = make_hparams(1, 0, {{Coef(1), Coef(0.5)}}, {{Coef(1), Coef(1)}});
  HParams s = shift_multiplier(h, Coef(-1));
  EXPECT_EQ(s.upper[0], (GammaPair{Coef(0.5), Coef(0.5)}));
  EXPECT_EQ(s.lower[0], (GammaPair{Coef(0), Coef(1)}));
}

TEST(Identities, DerivativeFiniteDifference) {
  for (int i = 0; i < 5; ++i) {
    HParams h = random_h22();
    double rho = uniform(0.2, 1.5);
    double sigma = uniform(0.6, 1.6);
    double lam = uniform(0.5, 1.5);
    for (int k : {1, 2}) {
      DerivativeForm d = derivative_params(h, Coef::inexact(rho), Coef::inexact(sigma), lam, k);
      EXPECT_EQ(d.sign, k == 1 ? -1 : 1);
      double x = 1.3;
      double rhs = d.sign * std::pow(x, d.power_shift.real()) * eval(d.params, lam * std::pow(x, sigma));
      auto f = [&](double y) { return std::pow(y, rho - 1.0) * eval(h, lam * std::pow(y, sigma)); };
      double e = k == 1 ? 1e-4 : 1e-3;
      double fd = k == 1 ? (f(x + e) - f(x - e)) / (2.0 * e) : (f(x + e) - 2.0 * f(x) + f(x - e)) / (e * e);
      EXPECT_LT(std::fabs(fd - rhs), 1e-5 * std::max(1.0, std::fabs(rhs))) << h.str() << " k=" << k;
    }
  }
}

TEST(Identities, DerivativeContract) {
  EXPECT_THROW(derivative_params(levy_params(), Coef(1), Coef(1), 1.0, 0), DomainError);
  EXPECT_THROW(derivative_params(levy_params(), Coef(1), Coef(-1), 1.0, 1), NonPositiveSigmaError);
  DerivativeForm d = derivative_params(levy_params(), Coef(1), Coef(1), 1.0, 1);
  EXPECT_EQ(d.params.m, 1);
  EXPECT_EQ(d.params.p(), 2);
  EXPECT_EQ(d.params.q(), 2);
  EXPECT_EQ(d.params.upper.back(), (GammaPair{Coef(0), Coef(1)}));
  EXPECT_EQ(d.params.lower.front(), (GammaPair{Coef(1), Coef(1)}));
}

TEST(Identities, CancelCommonFactors) {
  HParams h = make_hparams(1, 0, {{Coef(0.5), Coef(2)}}, {{Coef(0.5), Coef(2)}, {Coef(0), Coef(1)}});
  HParams c = cancel_common_factors(h);
  EXPECT_EQ(c.m, 0);
  EXPECT_EQ(c.p(), 0);
  EXPECT_EQ(c.q(), 1);
}

TEST(ExpClosedForm, Examples) {
  EXPECT_NEAR(exp_closed_form(1.0, 0.0, 1.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(exp_closed_form(0.25, 1.5, 1.0), 0.125 * std::exp(-0.25), 1e-16);
  EXPECT_NEAR(exp_closed_form(0.25, 1.5, 1.0), 0.097350, 1e-6);
  for (int i = 0; i < 5; ++i) {
    double z = std::exp(uniform(-1.5, 1.5));
    double b = uniform(-0.5, 2.0);
    double B = uniform(0.4, 2.0);
    HParams h = exp_closed_form_params(Coef::inexact(b), Coef::inexact(B));
    EXPECT_LT(rel_err(eval(h, z), exp_closed_form(z, b, B)), 1e-8) << z << " " << b << " " << B;
  }
}

TEST(HDistribution, MellinExamples) {
  HParams p = levy_params();
  double k = hdist_normalizer(p);
  EXPECT_NEAR(k * mellin_of_h(p, 1.0).real(), 1.0, 1e-13);
  EXPECT_NEAR(k * mellin_of_h(p, 1.25).real(), 1.4464090846320771, 1e-12);
  HParams q = p;
  q.delta = 2.0;
  EXPECT_NEAR(mellin_of_h(q, 1.0).real() / mellin_of_h(p, 1.0).real(), 0.5, 1e-14);
  EXPECT_THROW(mellin_of_h(p, 1.6), StripError);
}

TEST(HDistribution, MellinConsistencyByQuadrature) {
  HParams st = stable::hparams({0.5, 1.0});
  double kst = hdist_normalizer(st);
  for (double s : {0.3, 0.6, 0.9, 1.1, 1.3}) {
    double num = integral([&](double x) { return std::pow(x, s - 1.0) * levy(x, 1.0); }, 1e-10);
    EXPECT_LT(rel_err(kst * mellin_of_h(st, s).real(), num), 1e-5) << "s=" << s;
  }
  HParams inv = inverse_stable::hparams({0.6, 1.0});
  double kinv = hdist_normalizer(inv);
  for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    double num = integral(
        [&](double x) { return std::pow(x, s - 1.0) * kinv * eval_nonnegative(inv, inv.delta * x); }, 1e-9);
    EXPECT_LT(rel_err(kinv * mellin_of_h(inv, s).real(), num), 1e-5) << "s=" << s;
  }
}

TEST(HDistribution, LaplaceExamples) {
  HParams p = levy_params();
  double k = hdist_normalizer(p);
  EXPECT_LT(rel_err(k * laplace_of_h(p, 1.0), std::exp(-1.0)), 1e-10);
  EXPECT_NEAR(k * laplace_of_h(p, 0.0), 1.0, 1e-13);
  HParams l = laplace_params(exp_params());
  EXPECT_EQ(l.m, 1);
  EXPECT_EQ(l.n, 1);
}

TEST(HDistribution, Normalizer) {
  EXPECT_DOUBLE_EQ(hdist_normalizer(levy_params()), 2.0);
  EXPECT_NEAR(hdist_normalizer(exp_params()), 1.0, 1e-14);
  HParams p = stable::hparams({0.7, 2.0});
  double k = hdist_normalizer(p);
  EXPECT_LT(rel_err(k, stable::prefactor({0.7, 2.0})), 1e-13);
  double mass = integral([&](double x) { return hdist_density(p, x); }, 1e-9);
  EXPECT_NEAR(mass, 1.0, 1e-6);
}

TEST(HDistribution, CdfParams) {
  HParams f = hdist_cdf_params(levy_params());
  EXPECT_EQ(f.m, 0);
  EXPECT_EQ(f.n, 2);
  EXPECT_EQ(f.upper.front(), (GammaPair{Coef(1), Coef(1)}));
  EXPECT_EQ(f.lower.back(), (GammaPair{Coef(0), Coef(1)}));
  EXPECT_EQ(f.upper[1], (GammaPair{Coef(1), Coef(2)}));
  EXPECT_EQ(f.lower[0], (GammaPair{Coef(1), Coef(1)}));
  HParams bad = make_hparams(1, 0, {}, {{Coef(-2), Coef(1)}});
  EXPECT_THROW(hdist_cdf_params(bad), ProvisoViolatedError);
}

TEST(HDistribution, CdfValues) {
  EXPECT_LT(rel_err(hdist_cdf(levy_params(), 1.0), std::erfc(0.5)), 1e-9);
  EXPECT_EQ(hdist_cdf(levy_params(), HUGE_VAL), 1.0);
  EXPECT_NEAR(hdist_cdf(levy_params(), 1e8), 1.0, 1e-4);
  EXPECT_EQ(hdist_cdf(levy_params(), 0.0), 0.0);
}

TEST(EvalNonnegative, ClampsRoundoffOnly) {
  // Far in the left tail the Lévy density is below anything representable.
  double v = eval_nonnegative(levy_params(), 1e-4);
  EXPECT_GE(v, 0.0);
  EXPECT_LT(v, 1e-300);
  EXPECT_GT(eval_nonnegative(levy_params(), 0.5), 0.0);
}
