#include "subfox/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "subfox/algebra.hpp"
#include "subfox/error.hpp"
#include "subfox/gamma.hpp"
#include "subfox/hfunction.hpp"
#include "subfox/inverse_stable.hpp"
#include "subfox/quadrature.hpp"
#include "subfox/stable.hpp"
#include "subfox/tempered.hpp"
#include "subfox/wright.hpp"

namespace subfox {

namespace {

const double kSqrtPi = std::sqrt(M_PI);

class Runner {
 public:
  Runner(const VerifyOptions& o, std::vector<OracleReport>& out) : opt_(o), out_(out) {}

  // lhs: the library route under test; rhs: the oracle.
  void check(const std::string& id, const std::function<double()>& lhs,
             const std::function<double()>& rhs, double tol, double near_zero = 1e-300) {
    double scale = opt_.profile == TolProfile::strict ? 0.5 : 1.0;
    double l = std::numeric_limits<double>::quiet_NaN();
    double r = l;
    try {
      l = lhs() * (1.0 + opt_.perturb);
      r = rhs();
    } catch (const std::exception&) {
    }
    out_.push_back(make_report(id, l, r, tol * scale, near_zero));
  }

  // Passes when the two values differ by more than `gap` relative.
  void differ(const std::string& id, const std::function<double()>& a,
              const std::function<double()>& b, double gap) {
    double l = std::numeric_limits<double>::quiet_NaN();
    double r = l;
    try {
      l = a();
      r = b();
    } catch (const std::exception&) {
    }
    OracleReport rep = make_report(id, l, r, gap);
    rep.pass = std::isfinite(l) && std::isfinite(r) && rep.rel_err > gap;
    out_.push_back(rep);
  }

 private:
  const VerifyOptions& opt_;
  std::vector<OracleReport>& out_;
};

double integral(const RealFunction& f, double rel_tol = 1e-10) {
  return integrate_positive(f, QuadratureSpec{rel_tol}).value;
}

double levy(double x, double t) {
  if (x <= 0.0) return 0.0;
  return t / (2.0 * kSqrtPi) * std::exp(-1.5 * std::log(x) - t * t / (4.0 * x));
}

void gamma_suite(Runner& r) {
  r.check("gamma.log_gamma_1", [] { return log_gamma(1.0).real() + 1.0; }, [] { return 1.0; },
          1e-14);
  r.check("gamma.log_gamma_half", [] { return log_gamma(0.5).real(); },
          [] { return std::log(kSqrtPi); }, 1e-14);
  r.check("gamma.reflection_0.3",
          [] { return std::exp(log_gamma(0.3) + log_gamma(0.7)).real(); },
          [] { return M_PI / std::sin(0.3 * M_PI); }, 1e-12);
  r.check("gamma.ratio_half_threequarter", [] { return gamma_ratio(0.5, 0.75).real(); },
          [] { return std::tgamma(0.5) / std::tgamma(0.75); }, 1e-13);
  r.check("gamma.ratio_4_2", [] { return gamma_ratio(4.0, 2.0).real(); }, [] { return 6.0; },
          1e-13);
  for (Complex z : {Complex(2.3, 1.7), Complex(-3.4, 0.6), Complex(0.2, -5.0)}) {
    r.check("gamma.reflection_complex",
            [z] { return std::abs(gamma(z) * gamma(1.0 - z)); },
            [z] { return std::abs(M_PI / std::sin(M_PI * z)); }, 1e-10);
  }
  for (double z : {0.7, 3.1, 11.5}) {
    r.check("gamma.duplication",
            [z] { return gamma(2.0 * z).real(); },
            [z] {
              return std::pow(2.0, 2.0 * z - 1.0) / kSqrtPi * std::tgamma(z) * std::tgamma(z + 0.5);
            },
            1e-10);
    r.check("gamma.recurrence", [z] { return gamma(z + 1.0).real(); },
            [z] { return z * gamma(z).real(); }, 1e-12);
  }
}

HParams levy_params() { return stable::hparams({0.5, 1.0}); }

void hfun_suite(Runner& r) {
  HParams e = exp_closed_form_params(Coef(0), Coef(1));
  r.check("hfun.eval_exp_closed_form", [e] { return eval(e, 1.0); },
          [] { return std::exp(-1.0); }, 1e-10);
  r.check("hfun.chi_stable_half", [] { return chi(levy_params(), 0.5).real(); },
          [] { return 1.0 / kSqrtPi; }, 1e-13);
  r.check("hfun.eval_levy", [] { return 2.0 * eval(levy_params(), 1.0); },
          [] { return levy(1.0, 1.0); }, 1e-9);
  r.check("hfun.eval_inverse_half",
          [] { return eval(inverse_stable::hparams({0.5, 1.0}), 1.0); },
          [] { return std::exp(-0.25) / kSqrtPi; }, 1e-9);
  r.check("hfun.residue_right_levy",
          [] { return 2.0 * eval_residue_series(levy_params(), 1.0, Side::right).value; },
          [] { return levy(1.0, 1.0); }, 1e-8);
  r.check("hfun.residue_left_exp",
          [e] { return eval_residue_series(e, 2.0, Side::left).value; },
          [] { return std::exp(-2.0); }, 1e-12);
  r.check("hfun.reciprocal_argument",
          [e] { return eval(reciprocal_argument(e), 2.5); }, [e] { return eval(e, 0.4); },
          1e-9);
  HParams q = make_hparams(1, 1, {{Coef(0.2), Coef(1)}}, {{Coef(0.3), Coef(0.7)}, {Coef(0.1), Coef(0.4)}});
  r.check("hfun.power_argument",
          [q] {
            auto [k, p] = power_argument(q, Coef(1.7));
            return k * eval(p, 1.3);
          },
          [q] { return eval(q, std::pow(1.3, 1.7)); }, 1e-8);
  r.check("hfun.shift_multiplier", [q] { return eval(shift_multiplier(q, Coef(1.5)), 2.0); },
          [q] { return std::pow(2.0, 1.5) * eval(q, 2.0); }, 1e-8);
  r.check("hfun.derivative_fd",
          [q] {
            DerivativeForm d = derivative_params(q, Coef(0.5), Coef(1.2), 0.8, 1);
            double x = 1.3;
            return d.sign * std::pow(x, d.power_shift.real()) *
                   eval(d.params, 0.8 * std::pow(x, 1.2));
          },
          [q] {
            auto f = [q](double x) { return std::pow(x, -0.5) * eval(q, 0.8 * std::pow(x, 1.2)); };
            double h = 1e-4;
            return (f(1.3 + h) - f(1.3 - h)) / (2.0 * h);
          },
          1e-5);
  r.check("hfun.exp_closed_form_arith", [] { return exp_closed_form(0.25, 1.5, 1.0); },
          [] { return std::pow(0.25, 1.5) * std::exp(-0.25); }, 1e-14);
  r.check("hfun.mellin_of_h_stable",
          [] { return 2.0 * mellin_of_h(levy_params(), 1.25).real(); },
          [] { return integral([](double x) { return std::pow(x, 0.25) * levy(x, 1.0); }); },
          1e-6);
  r.check("hfun.laplace_of_h_stable", [] { return 2.0 * laplace_of_h(levy_params(), 1.0); },
          [] { return std::exp(-1.0); }, 1e-9);
  r.check("hfun.hdist_normalizer",
          [] { return hdist_normalizer(levy_params()); }, [] { return 2.0; }, 1e-13);
  r.check("hfun.hdist_cdf_levy", [] { return hdist_cdf(levy_params(), 1.0); },
          [] { return std::erfc(0.5); }, 1e-8);
  r.check("hfun.quadrature_vs_series",
          [q] {
            EvalOptions o;
            o.route = Route::quadrature;
            return evaluate(q, 0.6, o).value.real();
          },
          [q] { return eval_residue_series(q, 0.6, Side::left).value; }, 1e-7);
}

void wright_suite(Runner& r) {
  r.check("wright.m_half_zero", [] { return m_wright(0.5, 0.0); },
          [] { return 1.0 / kSqrtPi; }, 1e-14);
  r.check("wright.m_half_1", [] { return m_wright(0.5, 1.0); },
          [] { return std::exp(-0.25) / kSqrtPi; }, 1e-12);
  r.check("wright.m_half_2", [] { return m_wright(0.5, 2.0); },
          [] { return std::exp(-1.0) / kSqrtPi; }, 1e-12);
  r.check("wright.m_0.3_zero", [] { return m_wright(0.3, 0.0); },
          [] { return 1.0 / std::tgamma(0.7); }, 1e-14);
  r.check("wright.exp_series", [] { return generalized_wright({}, 1.0); },
          [] { return std::exp(1.0); }, 1e-14);
  for (double b : {0.2, 0.5, 0.8}) {
    for (double z : {0.1, 1.0, 2.0}) {
      r.check("wright.series_vs_mb", [b, z] { return m_wright_series(b, z).value; },
              [b, z] { return wright_mellin_barnes(m_wright_params(b), z); }, 1e-8);
    }
  }
  r.check("wright.m_normalization_0.6",
          [] { return integral([](double u) { return m_wright(0.6, u); }); },
          [] { return 1.0; }, 1e-6);
}

void stable_suite(Runner& r) {
  const StableSpec lv{0.5, 1.0};
  r.check("stable.levy_hfun", [lv] { return stable::density(lv, 1.0, DensityMethod::hfun); },
          [] { return levy(1.0, 1.0); }, 1e-7);
  r.check("stable.levy_mwright",
          [lv] { return stable::density(lv, 1.0, DensityMethod::mwright); },
          [] { return levy(1.0, 1.0); }, 1e-7);
  r.check("stable.levy_oracle", [lv] { return stable::density_integral_oracle(lv, 1.0); },
          [] { return levy(1.0, 1.0); }, 1e-7);
  r.check("stable.levy_t2", [] { return stable::density({0.5, 2.0}, 1.0, DensityMethod::hfun); },
          [] { return levy(1.0, 2.0); }, 1e-7);
  for (double x : {1.0, 2.0}) {
    r.check("stable.oracle_beta0.7", [x] { return stable::density({0.7, 1.0}, x); },
            [x] { return stable::density_integral_oracle({0.7, 1.0}, x); }, 1e-6);
  }
  r.check("stable.routes_beta0.7",
          [] { return stable::density({0.7, 1.0}, 1.5, DensityMethod::hfun); },
          [] { return stable::density({0.7, 1.0}, 1.5, DensityMethod::mwright); }, 1e-7);
  r.check("stable.cdf_levy", [lv] { return stable::cdf(lv, 1.0); },
          [] { return std::erfc(0.5); }, 1e-6);
  r.check("stable.cdf_vs_density_beta0.7", [] { return stable::cdf({0.7, 1.0}, 2.0); },
          [] {
            return integrate_interval([](double x) { return stable::density({0.7, 1.0}, x); }, 0.0,
                                      2.0, QuadratureSpec{1e-10})
                .value;
          },
          1e-6);
  r.check("stable.mellin_x_1.25", [lv] { return stable::mellin_x(lv, 1.25).real(); },
          [] { return integral([](double x) { return std::pow(x, 0.25) * levy(x, 1.0); }); },
          1e-6);
  r.check("stable.mellin_x_normalization", [] { return stable::mellin_x({0.7, 2.0}, 1.0).real(); },
          [] { return 1.0; }, 1e-13);
  r.check("stable.mellin_x_duplication",
          [] { return stable::mellin_x({0.5, 1.5}, 0.3).real(); },
          [] {
            // 2 t^(2(s-1)) Gamma(2u)/Gamma(u), u = 1-s, rewritten by duplication.
            double u = 0.7;
            return 2.0 * std::pow(1.5, 2.0 * (0.3 - 1.0)) * std::pow(2.0, 2.0 * u - 1.0) *
                   std::tgamma(u + 0.5) / kSqrtPi;
          },
          1e-10);
  r.check("stable.laplace_x_numeric",
          [] { return stable::laplace_x({0.7, 1.3}, 0.8); },
          [] {
            return integral([](double x) { return std::exp(-0.8 * x) * stable::density({0.7, 1.3}, x); });
          },
          1e-6);
  r.check("stable.laplace_x_hchain", [] { return stable::laplace_x_hchain({0.3, 2.0}, 5.0); },
          [] { return std::exp(-2.0 * std::pow(5.0, 0.3)); }, 1e-9);
  r.check("stable.mellin_t_half", [] { return stable::mellin_t(0.5, 1.0, 1.0).real(); },
          [] { return integral([](double t) { return levy(1.0, t); }); }, 1e-6);
  r.check("stable.mellin_t_sin_form", [] { return stable::mellin_t(0.7, 1.4, 0.6).real(); },
          [] {
            double s = 0.6;
            double b = 0.7;
            return std::pow(1.4, b * s - 1.0) * std::tgamma(s) * std::tgamma(1.0 - b * s) *
                   std::sin(b * s * M_PI) / M_PI;
          },
          1e-12);
  r.check("stable.laplace_t_numeric", [] { return stable::laplace_t(0.7, 2.0, 0.5); },
          [] {
            return integral([](double t) {
              return std::exp(-0.5 * t) * stable::density({0.7, t}, 2.0);
            });
          },
          1e-5);
  r.check("stable.self_similarity",
          [] { return stable::density({0.6, 2.5}, 1.7); },
          [] {
            double k = std::pow(2.5, -1.0 / 0.6);
            return k * stable::density({0.6, 1.0}, 1.7 * k);
          },
          1e-9);
  r.check("stable.normalization_beta0.7",
          [] { return integral([](double x) { return stable::density({0.7, 1.0}, x); }); },
          [] { return 1.0; }, 1e-6);
}

void inverse_suite(Runner& r) {
  const InverseStableSpec h{0.5, 1.0};
  r.check("inverse.density_half", [h] { return inverse_stable::density(h, 1.0); },
          [] { return std::exp(-0.25) / kSqrtPi; }, 1e-9);
  r.check("inverse.density_half_hfun",
          [h] { return inverse_stable::density(h, 1.0, DensityMethod::hfun); },
          [] { return std::exp(-0.25) / kSqrtPi; }, 1e-7);
  r.check("inverse.density_zero", [h] { return inverse_stable::density(h, 0.0); },
          [] { return 1.0 / kSqrtPi; }, 1e-13);
  r.check("inverse.density_t4", [] { return inverse_stable::density({0.5, 4.0}, 1.0); },
          [] { return 0.5 * std::exp(-1.0 / 16.0) / kSqrtPi; }, 1e-9);
  r.check("inverse.oracle_half", [h] { return inverse_stable::density_integral_oracle(h, 1.0); },
          [] { return std::exp(-0.25) / kSqrtPi; }, 1e-6);
  r.check("inverse.oracle_beta0.7",
          [] { return inverse_stable::density({0.7, 1.0}, 0.5); },
          [] { return inverse_stable::density_integral_oracle({0.7, 1.0}, 0.5); }, 1e-6);
  r.check("inverse.oracle_zero",
          [] { return inverse_stable::density_integral_oracle({0.6, 1.5}, 0.0); },
          [] { return std::pow(1.5, -0.6) / std::tgamma(0.4); }, 1e-6);
  r.check("inverse.cdf_complement", [h] { return inverse_stable::cdf(h, 1.0); },
          [] { return 1.0 - std::erfc(0.5); }, 1e-6);
  r.check("inverse.cdf_fd", [] {
            double e = 1e-4;
            return (inverse_stable::cdf({0.7, 1.0}, 0.8 + e) - inverse_stable::cdf({0.7, 1.0}, 0.8 - e)) /
                   (2.0 * e);
          },
          [] { return inverse_stable::density({0.7, 1.0}, 0.8); }, 1e-4);
  r.check("inverse.mellin_x_2", [h] { return inverse_stable::mellin_x(h, 2.0).real(); },
          [] { return integral([](double x) { return x * std::exp(-x * x / 4.0) / kSqrtPi; }); },
          1e-6);
  r.check("inverse.mellin_x_3", [h] { return inverse_stable::mellin_x(h, 3.0).real(); },
          [] { return 2.0; }, 1e-12);
  r.check("inverse.laplace_x_half", [h] { return inverse_stable::laplace_x(h, 1.0); },
          [] { return std::exp(1.0) * std::erfc(1.0); }, 1e-9);
  r.check("inverse.laplace_x_numeric", [] { return inverse_stable::laplace_x({0.7, 1.0}, 1.0); },
          [] {
            return integral([](double x) {
              return std::exp(-x) * inverse_stable::density({0.7, 1.0}, x);
            });
          },
          1e-6);
  r.check("inverse.mellin_t_quarter", [] { return inverse_stable::mellin_t(0.5, 1.0, 0.25).real(); },
          [] {
            return integral([](double t) {
              return std::pow(t, -0.75) * std::exp(-1.0 / (4.0 * t)) / std::sqrt(M_PI * t);
            });
          },
          1e-6);
  r.check("inverse.laplace_t_hchain", [] { return inverse_stable::laplace_t_hchain(0.3, 2.0, 4.0); },
          [] { return inverse_stable::laplace_t(0.3, 2.0, 4.0); }, 1e-8);
  r.check("inverse.laplace_t_numeric", [] { return inverse_stable::laplace_t(0.5, 1.0, 1.0); },
          [] { return integral([](double t) { return std::exp(-t) * inverse_stable::density({0.5, t}, 1.0); }); },
          1e-6);
  r.check("inverse.moment_numeric", [] { return inverse_stable::moment({0.7, 1.0}, 1.5); },
          [] {
            return integral([](double x) { return std::pow(x, 1.5) * inverse_stable::density({0.7, 1.0}, x); });
          },
          1e-5);
  r.check("inverse.variance", [h] { return inverse_stable::variance(h); },
          [] { return 2.0 - 4.0 / M_PI; }, 1e-12);
  for (double x : {0.5, 1.0}) {
    r.check("inverse.duality", [x] { return inverse_stable::duality_check(0.7, x, 2.0).lhs; },
            [x] { return inverse_stable::duality_check(0.7, x, 2.0).rhs; }, 1e-6);
  }
  r.check("inverse.self_similarity", [] { return inverse_stable::density({0.4, 3.0}, 0.9); },
          [] {
            double k = std::pow(3.0, -0.4);
            return k * inverse_stable::density({0.4, 1.0}, 0.9 * k);
          },
          1e-9);
}

void tempered_suite(Runner& r) {
  r.check("tempered.reduction", [] { return tempered::density({0.5, 0.0, 1.0}, 1.0); },
          [] { return levy(1.0, 1.0); }, 1e-12);
  r.check("tempered.density_lambda4", [] { return tempered::density({0.5, 4.0, 1.0}, 1.0); },
          [] { return std::exp(-2.0) * levy(1.0, 1.0); }, 1e-9);
  r.check("tempered.laplace_x", [] { return tempered::laplace_x({0.5, 1.0, 1.0}, 3.0); },
          [] { return std::exp(-1.0); }, 1e-14);
  r.check("tempered.laplace_x_numeric", [] { return tempered::laplace_x({0.6, 1.5, 1.0}, 0.7); },
          [] {
            return integral([](double x) { return std::exp(-0.7 * x) * tempered::density({0.6, 1.5, 1.0}, x); });
          },
          1e-6);
  r.check("tempered.laplace_x_hchain", [] { return tempered::laplace_x_hchain({0.6, 1.5, 1.0}, 0.7); },
          [] { return tempered::laplace_x({0.6, 1.5, 1.0}, 0.7); }, 1e-9);
  r.check("tempered.laplace_t_numeric", [] { return tempered::laplace_t(0.5, 1.0, 1.0, 2.0); },
          [] {
            return integral([](double t) {
              return std::exp(-2.0 * t) * tempered::density({0.5, 1.0, t}, 1.0);
            });
          },
          1e-5);
  r.check("tempered.laplace_t_reduction", [] { return tempered::laplace_t(0.7, 0.0, 2.0, 0.5); },
          [] { return stable::laplace_t(0.7, 2.0, 0.5); }, 1e-9);
  r.check("tempered.mellin_x_1", [] { return tempered::mellin_x({0.5, 1.0, 1.0}, 1.0).real(); },
          [] { return 1.0; }, 1e-6);
  r.check("tempered.mellin_x_2", [] { return tempered::mellin_x({0.5, 1.0, 1.0}, 2.0).real(); },
          [] { return integral([](double x) { return x * tempered::density({0.5, 1.0, 1.0}, x); }); },
          1e-5);
  r.check("tempered.mellin_x_3", [] { return tempered::mellin_x({0.5, 1.0, 1.0}, 3.0).real(); },
          [] { return tempered::moment({0.5, 1.0, 1.0}, 2); }, 1e-5);
  r.check("tempered.moment_1", [] { return tempered::moment({0.5, 1.0, 1.0}, 1); },
          [] { return 0.5; }, 1e-14);
  r.check("tempered.moment_2", [] { return tempered::moment({0.5, 1.0, 1.0}, 2); },
          [] { return 0.5; }, 1e-14);
  r.check("tempered.normalization",
          [] { return integral([](double x) { return tempered::density({0.7, 2.0, 1.0}, x); }); },
          [] { return 1.0; }, 1e-6);
  r.differ("tempered.no_self_similarity",
           [] { return std::pow(2.0, 1.0 / 0.5) * tempered::density({0.5, 1.0, 2.0}, 2.0); },
           [] { return tempered::density({0.5, 1.0, 1.0}, 2.0 * std::pow(2.0, -1.0 / 0.5)); },
           1e-3);
}

void algebra_suite(Runner& r) {
  const FamilyRef lv{Kind::stable, 0.5, 1.0};
  for (double z : {0.5, 1.0, 2.0}) {
    r.check("algebra.levy_ratio", [lv, z] { return quotient(lv, lv)(z); },
            [z] { return 1.0 / (M_PI * std::sqrt(z) * (1.0 + z)); }, 1e-5);
  }
  r.check("algebra.ratio_symmetry", [lv] { return 16.0 * quotient(lv, lv)(4.0); },
          [lv] { return quotient(lv, lv)(0.25); }, 1e-8);
  auto sd = [](double b) {
    return [b](double x) { return stable::density({b, 1.0}, x); };
  };
  auto id = [](double b) {
    return [b](double x) { return inverse_stable::density({b, 1.0}, x); };
  };
  r.check("algebra.product_stable_0.5_0.7",
          [] { return product({{Kind::stable, 0.5, 1.0}, {Kind::stable, 0.7, 1.0}})(1.3); },
          [sd] { return mellin_convolution_oracle(sd(0.5), sd(0.7), ConvolutionMode::product, 1.3); },
          1e-5);
  r.check("algebra.quotient_inverse_0.3_0.6",
          [] { return quotient({Kind::inverse, 0.3, 1.0}, {Kind::inverse, 0.6, 1.0})(0.8); },
          [id] { return mellin_convolution_oracle(id(0.3), id(0.6), ConvolutionMode::quotient, 0.8); },
          1e-5);
  r.check("algebra.product_inverse_0.5_0.7",
          [] { return product({{Kind::inverse, 0.5, 1.0}, {Kind::inverse, 0.7, 1.0}})(1.1); },
          [id] { return mellin_convolution_oracle(id(0.5), id(0.7), ConvolutionMode::product, 1.1); },
          1e-5);
  r.check("algebra.scalar_multiple", [lv] { return scalar_multiple(lv, 2.0)(2.0); },
          [] { return 0.5 * levy(1.0, 1.0); }, 1e-8);
  r.check("algebra.power_2", [lv] { return rational_power(lv, 2.0)(1.0); },
          [] { return 0.5 * levy(1.0, 1.0); }, 1e-8);
  r.check("algebra.power_minus_beta",
          [] { return rational_power({Kind::stable, 0.6, 1.0}, -0.6)(0.9); },
          [] { return inverse_stable::density({0.6, 1.0}, 0.9); }, 1e-6);
  r.check("algebra.mellin_factorization",
          [] {
            return product({{Kind::stable, 0.4, 1.5}, {Kind::stable, 0.7, 1.5}}).mellin(0.6).real();
          },
          [] {
            return (stable::mellin_x({0.4, 1.5}, 0.6) * stable::mellin_x({0.7, 1.5}, 0.6)).real();
          },
          1e-10);
  r.check("algebra.normalization_quotient",
          [] {
            ComposedDensity d = quotient({Kind::stable, 0.5, 1.0}, {Kind::stable, 0.7, 1.0});
            return integral([&d](double x) { return d(x); }, 1e-8);
          },
          [] { return 1.0; }, 1e-5);
  r.differ("algebra.power_is_not_product", [lv] { return rational_power(lv, 2.0)(1.0); },
           [lv] { return product({lv, lv})(1.0); }, 1e-3);
}

using Suite = void (*)(Runner&);

struct Entry {
  const char* name;
  Suite run;
};

const Entry kSuites[] = {
    {"gamma", gamma_suite},   {"hfun", hfun_suite},         {"wright", wright_suite},
    {"stable", stable_suite}, {"inverse", inverse_suite},   {"tempered", tempered_suite},
    {"algebra", algebra_suite},
};

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

std::vector<OracleReport> run_verify_suite(const std::string& suite,
                                           const VerifyOptions& options) {
  std::vector<OracleReport> out;
  Runner runner(options, out);
  bool found = false;
  for (const auto& e : kSuites) {
    if (suite == "all" || suite == e.name) {
      e.run(runner);
      found = true;
    }
  }
  if (!found) throw DomainError("verify: unknown suite '" + suite + "'");
  return out;
}

}  // namespace subfox
