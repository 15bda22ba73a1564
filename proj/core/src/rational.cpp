#include "subfox/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "subfox/error.hpp"

namespace subfox {
namespace {

__extension__ typedef __int128 i128;

std::optional<Rational> make_checked(i128 num, i128 den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr i128 lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) return std::nullopt;
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::optional<Rational> Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (x == std::floor(x) && std::fabs(x) < 9.0e15) {
    return Rational(static_cast<std::int64_t>(x), 1);
  }
  // Continued-fraction convergents; accept the first one that reproduces x.
  double rem = x;
  i128 p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rem);
    if (std::fabs(a) > 9.0e15) break;
    i128 ai = static_cast<i128>(a);
    i128 p2 = ai * p1 + p0;
    i128 q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    if (static_cast<double>(p2) / static_cast<double>(q2) == x) {
      return make_checked(p2, q2);
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = rem - a;
    if (frac == 0.0) break;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t n = 0, d = 0;
    auto a = text.substr(0, slash);
    auto b = text.substr(slash + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), n);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), d);
    if (r1.ec != std::errc() || r1.ptr != a.data() + a.size()) return std::nullopt;
    if (r2.ec != std::errc() || r2.ptr != b.data() + b.size() || d == 0) {
      return std::nullopt;
    }
    return make_checked(n, d);
  }
  // sign, digits, optional fraction, optional exponent
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  i128 mant = 0;
  int scale = 0;
  bool any = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    mant = mant * 10 + (text[i] - '0');
    any = true;
    if (mant > static_cast<i128>(1e30)) return std::nullopt;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      mant = mant * 10 + (text[i] - '0');
      --scale;
      any = true;
      if (mant > static_cast<i128>(1e30)) return std::nullopt;
    }
  }
  if (!any) return std::nullopt;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    int exp = 0;
    auto rest = text.substr(i);
    auto r = std::from_chars(rest.data(), rest.data() + rest.size(), exp);
    if (r.ec != std::errc() || r.ptr != rest.data() + rest.size()) return std::nullopt;
    scale += exp;
  } else if (i != text.size()) {
    return std::nullopt;
  }
  if (scale > 18 || scale < -18) return std::nullopt;
  i128 num = neg ? -mant : mant;
  i128 den = 1;
  for (; scale > 0; --scale) num *= 10;
  for (; scale < 0; ++scale) den *= 10;
  return make_checked(num, den);
}

std::optional<Rational> Rational::add(const Rational& a, const Rational& b) {
  return make_checked(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

std::optional<Rational> Rational::sub(const Rational& a, const Rational& b) {
  return make_checked(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

std::optional<Rational> Rational::mul(const Rational& a, const Rational& b) {
  return make_checked(static_cast<i128>(a.num_) * b.num_,
                      static_cast<i128>(a.den_) * b.den_);
}

std::optional<Rational> Rational::div(const Rational& a, const Rational& b) {
  if (b.num_ == 0) return std::nullopt;
  return make_checked(static_cast<i128>(a.num_) * b.den_,
                      static_cast<i128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Coef::Coef(double x) : value_(x, 0.0), exact_(Rational::from_double(x)) {}

Coef::Coef(std::complex<double> z) : value_(z) {
  if (z.imag() == 0.0) {
    exact_ = Rational::from_double(z.real());
  } else {
    exact_.reset();
  }
}

Coef::Coef(const Rational& r) : value_(r.to_double(), 0.0), exact_(r) {}

Coef Coef::inexact(double x) {
  Coef c;
  c.value_ = {x, 0.0};
  c.exact_.reset();
  return c;
}

namespace {

template <typename ExactOp, typename ValueOp>
Coef combine(const Coef& a, const Coef& b, ExactOp exact_op, ValueOp value_op) {
  if (a.exact() && b.exact()) {
    if (auto r = exact_op(*a.exact(), *b.exact())) return Coef(*r);
  }
  auto v = value_op(a.value(), b.value());
  if (v.imag() == 0.0) return Coef::inexact(v.real());
  return Coef(v);
}

}  // namespace

Coef Coef::operator-() const {
  Coef c = *this;
  c.value_ = -value_;
  if (exact_) c.exact_ = Rational(-exact_->num(), exact_->den());
  return c;
}

Coef operator+(const Coef& a, const Coef& b) {
  return combine(a, b, Rational::add, [](auto x, auto y) { return x + y; });
}
Coef operator-(const Coef& a, const Coef& b) {
  return combine(a, b, Rational::sub, [](auto x, auto y) { return x - y; });
}
Coef operator*(const Coef& a, const Coef& b) {
  return combine(a, b, Rational::mul, [](auto x, auto y) { return x * y; });
}
Coef operator/(const Coef& a, const Coef& b) {
  if (b.value() == std::complex<double>(0.0, 0.0)) {
    throw DomainError("coefficient division by zero");
  }
  return combine(a, b, Rational::div, [](auto x, auto y) { return x / y; });
}

bool operator==(const Coef& a, const Coef& b) {
  if (a.exact() && b.exact()) return *a.exact() == *b.exact();
  return a.value() == b.value();
}

std::string Coef::str() const {
  if (exact_) return exact_->str();
  std::ostringstream os;
  os.precision(17);
  if (is_real()) {
    os << value_.real();
  } else {
    os << "(" << value_.real() << (value_.imag() < 0 ? "" : "+") << value_.imag() << "i)";
  }
  return os.str();
}

}  // namespace subfox
