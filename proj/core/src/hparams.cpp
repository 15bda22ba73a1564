#include <algorithm>
#include <cmath>
#include <sstream>

#include "hfunction_detail.hpp"
#include "subfox/error.hpp"
#include "subfox/hfunction.hpp"

namespace subfox {

void HParams::validate() const {
  if (m < 0 || m > q()) throw DomainError("H-parameters: need 0 <= m <= q");
  if (n < 0 || n > p()) throw DomainError("H-parameters: need 0 <= n <= p");
  for (const auto& e : upper) {
    if (!e.A.is_real() || !(e.A.real() > 0.0) || !std::isfinite(e.A.real())) {
      throw DomainError("H-parameters: every A_i must be a positive real");
    }
  }
  for (const auto& e : lower) {
    if (!e.A.is_real() || !(e.A.real() > 0.0) || !std::isfinite(e.A.real())) {
      throw DomainError("H-parameters: every B_j must be a positive real");
    }
  }
  if (delta == 0.0 || !std::isfinite(delta)) {
    throw DomainError("H-parameters: delta must be nonzero and finite");
  }
}

bool HParams::is_real() const noexcept {
  auto real = [](const GammaPair& g) { return g.a.is_real(); };
  return std::all_of(upper.begin(), upper.end(), real) &&
         std::all_of(lower.begin(), lower.end(), real);
}

std::string HParams::str() const {
  std::ostringstream os;
  os << "H^{" << m << "," << n << "}_{" << p() << "," << q() << "}[";
  for (std::size_t i = 0; i < upper.size(); ++i) {
    os << (i ? "," : "") << "(" << upper[i].a.str() << "," << upper[i].A.str() << ")";
  }
  os << ";";
  for (std::size_t j = 0; j < lower.size(); ++j) {
    os << (j ? "," : "") << "(" << lower[j].a.str() << "," << lower[j].A.str() << ")";
  }
  os << "]";
  if (delta != 1.0) os << " delta=" << delta;
  return os.str();
}

HParams make_hparams(int m, int n, std::vector<GammaPair> upper,
                     std::vector<GammaPair> lower, double delta) {
  HParams h{m, n, std::move(upper), std::move(lower), delta};
  h.validate();
  return h;
}

std::vector<GammaFactor> gamma_factors(const HParams& params) {
  std::vector<GammaFactor> out;
  out.reserve(params.upper.size() + params.lower.size());
  const Coef one(1.0);
  for (int j = 0; j < params.q(); ++j) {
    const auto& e = params.lower[static_cast<std::size_t>(j)];
    if (j < params.m) {
      out.push_back({e.a, e.A, true});
    } else {
      out.push_back({one - e.a, -e.A, false});
    }
  }
  for (int i = 0; i < params.p(); ++i) {
    const auto& e = params.upper[static_cast<std::size_t>(i)];
    if (i < params.n) {
      out.push_back({one - e.a, -e.A, true});
    } else {
      out.push_back({e.a, e.A, false});
    }
  }
  return out;
}

namespace detail {

std::optional<long> singular_index(const GammaFactor& f, const Complex& s,
                                   const std::optional<Rational>& s_exact) {
  if (s_exact && f.alpha.exact() && f.kappa.exact()) {
    auto ks = Rational::mul(*f.kappa.exact(), *s_exact);
    if (ks) {
      auto w = Rational::add(*f.alpha.exact(), *ks);
      if (w) {
        if (w->is_integer() && w->num() <= 0) return -w->num();
        return std::nullopt;
      }
    }
  }
  Complex w = f.alpha.value() + f.kappa.value() * s;
  double scale = std::max(1.0, std::abs(w));
  if (std::fabs(w.imag()) > 1e-9 * scale) return std::nullopt;
  double r = std::round(w.real());
  if (r > 0.0) return std::nullopt;
  if (std::fabs(w.real() - r) > 1e-9 * scale) return std::nullopt;
  return static_cast<long>(-r);
}

Complex log_singular_coefficient(long k, double kappa) {
  // Gamma(alpha + kappa s) ~ (-1)^k / (k! kappa (s - s0)) near its k-th pole.
  Complex lg(-std::lgamma(static_cast<double>(k) + 1.0), 0.0);
  lg -= std::log(Complex(kappa, 0.0));
  if (k % 2 != 0) lg += Complex(0.0, M_PI);
  return lg;
}

LocalExpansion local_expansion(const std::vector<GammaFactor>& factors,
                               const Complex& s,
                               const std::optional<Rational>& s_exact,
                               bool loose) {
  LocalExpansion e;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    auto k = (s_exact || loose) ? singular_index(f, s, s_exact) : pole_index(f.alpha.value() + f.kappa.value() * s);
    Complex term;
    if (k) {
      term = log_singular_coefficient(*k, f.kappa.real());
      if (f.numerator) {
        ++e.num_order;
        e.singular_numerators.push_back(i);
      } else {
        ++e.den_order;
      }
    } else {
      term = log_gamma(f.alpha.value() + f.kappa.value() * s);
    }
    e.log_value += f.numerator ? term : -term;
  }
  return e;
}

}  // namespace detail

Complex log_chi(const HParams& params, Complex s) {
  Complex acc = 0.0;
  for (const auto& f : gamma_factors(params)) {
    Complex lg = log_gamma(f.alpha.value() + f.kappa.value() * s);
    acc += f.numerator ? lg : -lg;
  }
  return acc;
}

Complex chi(const HParams& params, Complex s) {
  auto factors = gamma_factors(params);
  auto e = detail::local_expansion(factors, s, std::nullopt);
  int net = e.num_order - e.den_order;
  if (net > 0) {
    const auto& f = factors[e.singular_numerators.front()];
    std::ostringstream os;
    os << "chi: pole of numerator factor Gamma(" << f.alpha.str() << " + "
       << f.kappa.str() << " s) at s = " << s.real();
    if (s.imag() != 0.0) os << (s.imag() < 0 ? "" : "+") << s.imag() << "i";
    throw PoleError(os.str());
  }
  if (net < 0) return 0.0;
  return std::exp(e.log_value);
}

namespace {

struct Candidate {
  Complex s;
  std::optional<Rational> exact;
};

std::optional<Rational> pole_position_exact(const GammaFactor& f, long k) {
  if (!f.alpha.exact() || !f.kappa.exact()) return std::nullopt;
  auto num = Rational::add(*f.alpha.exact(), Rational(k, 1));
  if (!num) return std::nullopt;
  auto r = Rational::div(*num, *f.kappa.exact());
  if (!r) return std::nullopt;
  return Rational(-r->num(), r->den());
}

bool same_point(const Candidate& a, const Candidate& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return std::abs(a.s - b.s) <= 1e-10 * (1.0 + std::abs(a.s));
}

// Candidates sorted along the real axis, duplicates merged.
std::vector<Candidate> dedupe(std::vector<Candidate> c) {
  std::sort(c.begin(), c.end(), [](const Candidate& x, const Candidate& y) {
    if (x.s.real() != y.s.real()) return x.s.real() < y.s.real();
    return x.s.imag() < y.s.imag();
  });
  std::vector<Candidate> out;
  for (auto& x : c) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (std::fabs(it->s.real() - x.s.real()) > 1e-9 * (1.0 + std::fabs(x.s.real()))) break;
      if (same_point(*it, x)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(x);
  }
  return out;
}

}  // namespace

PoleLayout pole_layout(const HParams& params, int per_factor, bool cancel_removable) {
  params.validate();
  auto factors = gamma_factors(params);
  std::vector<Candidate> num_points;
  std::vector<Candidate> den_points;
  for (const auto& f : factors) {
    for (long k = 0; k < per_factor; ++k) {
      Complex s = -(f.alpha.value() + static_cast<double>(k)) / f.kappa.value();
      (f.numerator ? num_points : den_points).push_back({s, pole_position_exact(f, k)});
    }
  }
  PoleLayout layout;
  for (const auto& c : dedupe(std::move(num_points))) {
    int num = 0;
    int den = 0;
    bool has_left = false;
    bool has_right = false;
    for (const auto& f : factors) {
      if (!detail::singular_index(f, c.s, c.exact)) continue;
      if (f.numerator) {
        ++num;
        (f.kappa.real() > 0 ? has_left : has_right) = true;
      } else {
        ++den;
      }
    }
    int net = cancel_removable ? num - den : num;
    if (net <= 0) {
      layout.removable.push_back({c.s, c.exact, 0});
      continue;
    }
    if (has_left && has_right) {
      throw EmptyStripError("pole_layout: a pole at s = " + std::to_string(c.s.real()) +
                            " belongs to both the left and the right family");
    }
    Pole p{c.s, c.exact, net};
    if (has_left) {
      layout.left_poles.push_back(p);
    } else {
      layout.right_poles.push_back(p);
    }
  }
  for (const auto& c : dedupe(std::move(den_points))) {
    bool cancelled = false;
    for (const auto& f : factors) {
      if (f.numerator && detail::singular_index(f, c.s, c.exact)) {
        cancelled = true;
        break;
      }
    }
    if (!cancelled) layout.zeros.push_back({c.s, c.exact, 1});
  }
  // left family: nearest first (descending real part); right: ascending.
  std::reverse(layout.left_poles.begin(), layout.left_poles.end());
  for (const auto& p : layout.left_poles) {
    layout.strip_lo = std::max(layout.strip_lo, p.s.real());
  }
  for (const auto& p : layout.right_poles) {
    layout.strip_hi = std::min(layout.strip_hi, p.s.real());
  }
  if (!(layout.strip_lo < layout.strip_hi)) {
    throw EmptyStripError("pole_layout: left poles reach " + std::to_string(layout.strip_lo) +
                          " but right poles start at " + std::to_string(layout.strip_hi));
  }
  return layout;
}

}  // namespace subfox
