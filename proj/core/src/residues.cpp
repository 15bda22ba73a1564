#include <cmath>
#include <limits>
#include <sstream>

#include "hfunction_detail.hpp"
#include "subfox/error.hpp"
#include "subfox/hfunction.hpp"

namespace subfox {

namespace {

struct Cursor {
  std::size_t factor;
  long k = 0;
};

Complex position(const GammaFactor& f, long k) {
  return -(f.alpha.value() + static_cast<double>(k)) / f.kappa.value();
}

std::optional<Rational> exact_position(const GammaFactor& f, long k) {
  if (!f.alpha.exact() || !f.kappa.exact()) return std::nullopt;
  auto num = Rational::add(*f.alpha.exact(), Rational(k, 1));
  if (!num) return std::nullopt;
  auto r = Rational::div(*num, *f.kappa.exact());
  if (!r) return std::nullopt;
  return Rational(-r->num(), r->den());
}

bool coincide(const Complex& a, const std::optional<Rational>& ea, const Complex& b,
              const std::optional<Rational>& eb) {
  if (ea && eb) return *ea == *eb;
  return std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a));
}

}  // namespace

SeriesResult eval_residue_series(const HParams& params, double z, Side side, int max_terms,
                                 double tol) {
  params.validate();
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("residue series: argument must be non-negative and finite");
  }
  if (z == 0.0 && side == Side::right) {
    throw DomainError("residue series: z = 0 requires the left pole family");
  }
  const auto factors = gamma_factors(params);
  std::vector<Cursor> family;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (!f.numerator) continue;
    bool left = f.kappa.real() > 0.0;
    if (left == (side == Side::left)) family.push_back({i, 0});
  }
  // Distance into the closed half-plane; increases along each family.
  auto key = [&](const Complex& s) { return side == Side::left ? -s.real() : s.real(); };
  const double log_z = z > 0.0 ? std::log(z) : 0.0;
  const double sign = side == Side::left ? 1.0 : -1.0;

  SeriesResult out;
  if (family.empty()) return out;

  long double sum_re = 0.0L;
  long double sum_im = 0.0L;
  long double comp_re = 0.0L;
  long double comp_im = 0.0L;
  double abs_sum = 0.0;
  double rounding = 0.0;
  int quiet = 0;
  int growth = 0;
  double last_mag = 0.0;
  double peak = 0.0;

  for (int term = 0; term < max_terms; ++term) {
    std::size_t pick = 0;
    Complex s0 = position(factors[family[0].factor], family[0].k);
    for (std::size_t c = 1; c < family.size(); ++c) {
      Complex sc = position(factors[family[c].factor], family[c].k);
      if (key(sc) < key(s0)) {
        s0 = sc;
        pick = c;
      }
    }
    auto e0 = exact_position(factors[family[pick].factor], family[pick].k);
    for (auto& cur : family) {
      const auto& f = factors[cur.factor];
      if (coincide(position(f, cur.k), exact_position(f, cur.k), s0, e0)) ++cur.k;
    }

    auto local = detail::local_expansion(factors, s0, e0, true);
    for (std::size_t idx : local.singular_numerators) {
      bool left = factors[idx].kappa.real() > 0.0;
      if (left != (side == Side::left)) {
        throw CoincidentPolesError("residue series: left and right poles coincide at s = " +
                                   std::to_string(s0.real()));
      }
    }
    int net = local.num_order - local.den_order;
    if (net >= 2) {
      std::ostringstream os;
      os << "residue series: pole of order " << net << " at s = " << s0.real()
         << " (only simple poles are summed)";
      throw CoincidentPolesError(os.str());
    }
    ++out.terms;
    Complex t = 0.0;
    if (net == 1) {
      if (z == 0.0) {
        if (s0.real() > 0.0 || (s0.real() == 0.0 && s0.imag() != 0.0)) {
          throw DomainError("residue series: H diverges at z = 0");
        }
        if (s0.real() == 0.0) t = std::exp(local.log_value);
      } else {
        Complex l = local.log_value - s0 * log_z;
        if (l.real() > 709.0) {
          throw DivergentSeriesError("residue series: terms overflow");
        }
        t = std::exp(l);
        rounding += std::abs(t) * 1e-16 * (4.0 + std::abs(l));
      }
      t *= sign;
    }
    // Compensated summation in extended precision.
    long double yr = static_cast<long double>(t.real()) - comp_re;
    long double tr = sum_re + yr;
    comp_re = (tr - sum_re) - yr;
    sum_re = tr;
    long double yi = static_cast<long double>(t.imag()) - comp_im;
    long double ti = sum_im + yi;
    comp_im = (ti - sum_im) - yi;
    sum_im = ti;

    double mag = std::abs(t);
    abs_sum += mag;
    peak = std::max(peak, mag);
    double total = std::hypot(static_cast<double>(sum_re), static_cast<double>(sum_im));
    if (net == 1 && mag <= tol * total) {
      ++quiet;
    } else if (net == 1) {
      quiet = 0;
    } else if (z == 0.0 || total > 0.0) {
      ++quiet;
    }
    if (net == 1 && mag > last_mag && last_mag > 0.0) {
      ++growth;
    } else if (net == 1) {
      growth = 0;
    }
    if (net == 1) last_mag = mag;
    if (growth >= 60 && mag > 1e30 * std::max(total, 1e-300)) {
      throw DivergentSeriesError("residue series: terms grow without bound");
    }
    if (quiet >= 4 || (z == 0.0 && s0.real() < -1.0 && quiet >= 1)) {
      out.value = static_cast<double>(sum_re);
      out.imag = static_cast<double>(sum_im);
      out.truncation_bound = last_mag;
      out.rounding_bound = rounding + 2e-19 * abs_sum;
      return out;
    }
  }
  throw DivergentSeriesError("residue series: no convergence after " +
                             std::to_string(max_terms) + " terms");
}

}  // namespace subfox
