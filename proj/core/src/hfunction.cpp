#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "subfox/error.hpp"
#include "subfox/hfunction.hpp"

namespace subfox {

const char* route_name(Route r) noexcept {
  switch (r) {
    case Route::automatic:
      return "auto";
    case Route::quadrature:
      return "quadrature";
    case Route::residue_left:
      return "residue-left";
    case Route::residue_right:
      return "residue-right";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Half-width of the search window for the contour abscissa when the strip
// is unbounded.
constexpr double kWindow = 300.0;
constexpr double kPoleClearance = 0.05;
constexpr double kMaxAbscissa = 1e6;

// chi(s) z^-s in log form, with the gamma factors unpacked once.
class LogIntegrand {
 public:
  LogIntegrand(const HParams& params, double z) : log_z_(std::log(z)) {
    for (const auto& f : gamma_factors(params)) {
      alpha_.push_back(f.alpha.value());
      kappa_.push_back(f.kappa.real());
      sign_.push_back(f.numerator ? 1.0 : -1.0);
    }
  }

  Complex operator()(Complex s) const {
    Complex acc = -s * log_z_;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      acc += sign_[i] * log_gamma(alpha_[i] + kappa_[i] * s);
    }
    return acc;
  }

 private:
  double log_z_;
  std::vector<Complex> alpha_;
  std::vector<double> kappa_;
  std::vector<double> sign_;
};

struct Strip {
  double lo;
  double hi;
  std::vector<double> avoid;
};

Strip admissible_strip(const HParams& params) {
  auto layout = pole_layout(params);
  Strip st{layout.strip_lo, layout.strip_hi, {}};
  auto collect = [&](const std::vector<Pole>& v) {
    for (const auto& p : v) {
      if (std::fabs(p.s.imag()) < kPoleClearance) st.avoid.push_back(p.s.real());
    }
  };
  collect(layout.removable);
  collect(layout.zeros);
  return st;
}

bool near_avoided(const Strip& st, double c) {
  for (double a : st.avoid) {
    if (std::fabs(c - a) < kPoleClearance) return true;
  }
  return false;
}

double saddle_objective(const LogIntegrand& f, const Strip& st, double c) {
  if (near_avoided(st, c)) return kInf;
  try {
    double a = f(Complex(c, 0.0)).real();
    double b = f(Complex(c, 0.75)).real();
    double v = std::max(a, b);
    return std::isnan(v) ? kInf : v;
  } catch (const Error&) {
    return kInf;
  }
}

double choose_abscissa(const LogIntegrand& f, const Strip& st) {
  double gap = st.hi - st.lo;
  double margin = std::isfinite(gap) ? std::min(0.1, gap / 4.0) : 0.1;
  double a = st.lo + margin;
  double b = st.hi - margin;
  std::vector<double> grid;
  if (std::isfinite(a) && std::isfinite(b)) {
    // A finite strip wider than the window is searched near both edges.
    if (b - a > 2 * kWindow) {
      b = a + 2 * kWindow;
    }
    for (int i = 0; i <= 64; ++i) grid.push_back(a + (b - a) * i / 64.0);
  } else if (std::isfinite(a) || std::isfinite(b)) {
    double edge = std::isfinite(a) ? a : b;
    double dir = std::isfinite(a) ? 1.0 : -1.0;
    grid.push_back(edge);
    for (double d = 0.02; d <= kWindow; d *= 1.2) grid.push_back(edge + dir * d);
  } else {
    grid.push_back(0.0);
    for (double d = 0.02; d <= kWindow; d *= 1.2) {
      grid.push_back(d);
      grid.push_back(-d);
    }
  }
  std::sort(grid.begin(), grid.end());
  std::vector<double> vals(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = saddle_objective(f, st, grid[i]);
    if (vals[i] < vals[best]) best = i;
  }
  if (!std::isfinite(vals[best])) {
    throw ContourError("no admissible contour abscissa found");
  }
  // The saddle may lie beyond the window on an unbounded side: keep walking
  // outward while the objective decreases.
  auto extend = [&](bool upward) {
    bool open = upward ? !std::isfinite(st.hi) : !std::isfinite(st.lo);
    std::size_t end = upward ? grid.size() - 1 : 0;
    if (!open || best != end) return;
    double step = std::max(1.0, std::fabs(grid[end]) * 0.2);
    while (std::fabs(grid[best]) < kMaxAbscissa) {
      double x = grid[best] + (upward ? step : -step);
      double v = saddle_objective(f, st, x);
      if (!(v < vals[best])) break;
      if (upward) {
        grid.push_back(x);
        vals.push_back(v);
        best = grid.size() - 1;
      } else {
        grid.insert(grid.begin(), x);
        vals.insert(vals.begin(), v);
        best = 0;
      }
      step *= 1.2;
    }
  };
  extend(true);
  extend(false);
  // Local refinement between the neighbours of the best grid point.
  double lo = grid[best > 0 ? best - 1 : best];
  double hi = grid[best + 1 < grid.size() ? best + 1 : best];
  double c = grid[best];
  double fc = vals[best];
  for (int pass = 0; pass < 2 && hi > lo; ++pass) {
    double nlo = lo;
    double nhi = hi;
    for (int i = 0; i <= 12; ++i) {
      double x = lo + (hi - lo) * i / 12.0;
      double v = saddle_objective(f, st, x);
      if (v < fc) {
        fc = v;
        c = x;
      }
    }
    double step = (hi - lo) / 12.0;
    nlo = std::max(lo, c - step);
    nhi = std::min(hi, c + step);
    lo = nlo;
    hi = nhi;
  }
  return c;
}

void check_abscissa(const Strip& st, double c) {
  if (!(c > st.lo && c < st.hi)) {
    std::ostringstream os;
    os << "contour abscissa c = " << c << " is outside the admissible strip (" << st.lo
       << ", " << st.hi << ")";
    throw ContourError(os.str());
  }
}

void check_argument(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("H-function argument must be positive and finite");
  }
}

struct QuadResult {
  Complex value;
  double error;
  double l1;
  double half_height;
  long evaluations;
};

// Trapezoid rule on s = c + i tau, values scaled by exp(-ref).
class LineSum {
 public:
  LineSum(const LogIntegrand& f, double c, double ref) : f_(f), c_(c), ref_(ref) {}

  Complex at(double tau) {
    ++evals_;
    Complex raw = f_(Complex(c_, tau));
    Complex l = raw - ref_;
    if (l.real() < -745.0) return 0.0;
    log_size_ = std::max(log_size_, std::abs(raw));
    return std::exp(l);
  }

  // Relative rounding level of a node value: log chi is accurate to a few
  // ulps of its own magnitude.
  double rounding_level() const noexcept { return 4e-16 * (8.0 + log_size_); }

  // Sum of f(k h) over k in [k0, k1] and -k, both sides.
  void both_sides(long k0, long k1, long stride, double h, Complex& sum, double& l1) {
    for (long k = k0; k <= k1; k += stride) {
      Complex u = at(static_cast<double>(k) * h);
      Complex v = at(-static_cast<double>(k) * h);
      sum += u + v;
      l1 += std::abs(u) + std::abs(v);
    }
  }

  long evaluations() const noexcept { return evals_; }

 private:
  const LogIntegrand& f_;
  double c_;
  double ref_;
  long evals_ = 0;
  double log_size_ = 0.0;
};

QuadResult line_quadrature(const LogIntegrand& f, const Strip& st, double c,
                           const EvalOptions& opt) {
  double ref;
  try {
    ref = f(Complex(c, 0.0)).real();
  } catch (const PoleError&) {
    throw ContourError("contour passes through a singular point of chi");
  }
  if (!std::isfinite(ref)) ref = 0.0;
  // At the saddle |chi(s) z^-s| peaks near tau = 0; below this the whole
  // integral underflows.
  if (ref + std::log(2.0 * opt.max_half_height) < -750.0) return {0.0, 0.0, 0.0, 0.0, 1};
  LineSum line(f, c, ref);

  double d = std::min(c - st.lo, st.hi - c);
  double T = 8.0;
  double h = std::min(0.5, d / 2.0);
  bool adaptive = true;
  if (opt.contour) {
    T = opt.contour->half_height;
    h = 2.0 * T / std::max(16, opt.contour->nodes);
    adaptive = opt.contour->adaptive;
  }
  const double scale_back = std::exp(ref);

  long N = std::max<long>(1, std::lround(T / h));
  Complex raw = line.at(0.0);
  double l1 = std::abs(raw);
  line.both_sides(1, N, 1, h, raw, l1);

  if (!adaptive) {
    QuadResult r{raw * h / (2 * M_PI) * scale_back, 0.0, l1 * h / (2 * M_PI) * scale_back, N * h,
                 line.evaluations()};
    return r;
  }

  // Extend the height until the outermost panel is negligible.
  for (;;) {
    Complex panel = 0.0;
    double panel_l1 = 0.0;
    line.both_sides(N + 1, 2 * N, 1, h, panel, panel_l1);
    raw += panel;
    l1 += panel_l1;
    N *= 2;
    double scale = std::max(std::abs(raw), 1e-3 * l1);
    if (panel_l1 <= opt.rel_tol * 1e-2 * scale) break;
    if (N * h > opt.max_half_height) {
      throw NonConvergedError("H quadrature: integrand does not decay along the contour",
                              panel_l1 / std::max(scale, 1e-300));
    }
  }

  // Halve the step, reusing the existing nodes.
  Complex sum = raw * h;
  double diff = kInf;
  for (int r = 0; r < opt.max_refinements; ++r) {
    Complex odd = 0.0;
    double odd_l1 = 0.0;
    line.both_sides(1, 2 * N - 1, 2, h / 2.0, odd, odd_l1);
    Complex next = 0.5 * sum + odd * (h / 2.0);
    l1 += odd_l1;
    diff = std::abs(next - sum);
    sum = next;
    h /= 2.0;
    N *= 2;
    double l1_int = l1 * h;
    double floor = line.rounding_level() * l1_int;
    if (diff <= std::max(opt.rel_tol * std::abs(sum), floor)) {
      double err = (diff + floor) / (2 * M_PI) * scale_back;
      return {sum / (2 * M_PI) * scale_back, err, l1_int / (2 * M_PI) * scale_back, N * h,
              line.evaluations()};
    }
  }
  throw NonConvergedError("H quadrature: step refinement did not converge",
                          diff / std::max(std::abs(sum), 1e-300));
}

}  // namespace

double default_abscissa(const HParams& params, double z) {
  params.validate();
  check_argument(z);
  Strip st = admissible_strip(params);
  return choose_abscissa(LogIntegrand(params, z), st);
}

namespace {

Evaluation quadrature_route(const HParams& params, double z, const EvalOptions& opt) {
  Strip st = admissible_strip(params);
  LogIntegrand f(params, z);
  double c;
  if (opt.contour) {
    c = opt.contour->c;
    check_abscissa(st, c);
  } else {
    c = choose_abscissa(f, st);
  }
  QuadResult q = line_quadrature(f, st, c, opt);
  Evaluation e;
  e.value = q.value;
  e.error_estimate = q.error;
  e.route = Route::quadrature;
  e.c = c;
  e.half_height = q.half_height;
  e.evaluations = q.evaluations;
  return e;
}

Evaluation series_route(const HParams& params, double z, Side side, const EvalOptions& opt) {
  SeriesResult s = eval_residue_series(params, z, side, opt.max_series_terms);
  Evaluation e;
  e.value = Complex(s.value, s.imag);
  e.error_estimate = s.truncation_bound + s.rounding_bound;
  e.route = side == Side::left ? Route::residue_left : Route::residue_right;
  e.evaluations = s.terms;
  return e;
}

}  // namespace

Evaluation evaluate(const HParams& params, double z, const EvalOptions& options) {
  params.validate();
  switch (options.route) {
    case Route::residue_left:
      return series_route(params, z, Side::left, options);
    case Route::residue_right:
      return series_route(params, z, Side::right, options);
    case Route::quadrature:
      check_argument(z);
      return quadrature_route(params, z, options);
    case Route::automatic:
      break;
  }
  if (z == 0.0) return series_route(params, z, Side::left, options);
  check_argument(z);
  try {
    return quadrature_route(params, z, options);
  } catch (const NonConvergedError&) {
    Side first = z <= 1.0 ? Side::left : Side::right;
    Side second = first == Side::left ? Side::right : Side::left;
    for (Side side : {first, second}) {
      try {
        return series_route(params, z, side, options);
      } catch (const Error&) {
      }
    }
    throw;
  }
}

Complex eval_complex(const HParams& params, double z, const std::optional<ContourSpec>& contour) {
  EvalOptions opt;
  opt.contour = contour;
  return evaluate(params, z, opt).value;
}

double eval(const HParams& params, double z, const std::optional<ContourSpec>& contour) {
  EvalOptions opt;
  opt.contour = contour;
  Evaluation e = evaluate(params, z, opt);
  double re = e.value.real();
  double im = e.value.imag();
  if (std::fabs(im) > 1e-8 * std::fabs(re) + 10.0 * e.error_estimate + 1e-300) {
    std::ostringstream os;
    os << "H evaluation left an imaginary part " << im << " against real part " << re;
    throw NonConvergedError(os.str(), std::fabs(im));
  }
  return re;
}

double eval_nonnegative(const HParams& params, double z, const EvalOptions& options) {
  Evaluation e = evaluate(params, z, options);
  double v = e.value.real();
  if (v >= 0.0) return v;
  if (-v <= 10.0 * e.error_estimate) return 0.0;
  std::ostringstream os;
  os << "H evaluation returned " << v << " for a non-negative quantity (error estimate "
     << e.error_estimate << ")";
  throw NonConvergedError(os.str(), -v);
}

}  // namespace subfox
