#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace subfox {

// Reduced fraction with positive denominator. Arithmetic that would overflow
// int64 yields std::nullopt from the checked operations.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_integer() const noexcept { return den_ == 1; }

  // Smallest-denominator fraction (den <= max_den) whose double value is
  // bit-identical to x, if one exists.
  static std::optional<Rational> from_double(double x,
                                             std::int64_t max_den = 1000000);
  // Parses decimal literals such as "0.3", "-1.25", "3/7", "2e-3".
  static std::optional<Rational> parse(std::string_view text);

  static std::optional<Rational> add(const Rational& a, const Rational& b);
  static std::optional<Rational> sub(const Rational& a, const Rational& b);
  static std::optional<Rational> mul(const Rational& a, const Rational& b);
  static std::optional<Rational> div(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A parameter coefficient: a complex value that additionally remembers an
// exact rational form when one is known. Exactness survives +,-,*,/ between
// exact operands and is what pole bookkeeping uses to decide coincidences.
class Coef {
 public:
  Coef() = default;
  // Real input; an exact rational is attached when the double is exactly
  // representable as p/q with q <= 1e6.
  Coef(double x);  // NOLINT(google-explicit-constructor)
  Coef(int x) : Coef(static_cast<double>(x)) {}  // NOLINT
  explicit Coef(std::complex<double> z);
  explicit Coef(const Rational& r);
  // Real value with no exactness claim.
  static Coef inexact(double x);

  std::complex<double> value() const noexcept { return value_; }
  double real() const noexcept { return value_.real(); }
  bool is_real() const noexcept { return value_.imag() == 0.0; }
  const std::optional<Rational>& exact() const noexcept { return exact_; }

  Coef operator-() const;
  friend Coef operator+(const Coef& a, const Coef& b);
  friend Coef operator-(const Coef& a, const Coef& b);
  friend Coef operator*(const Coef& a, const Coef& b);
  friend Coef operator/(const Coef& a, const Coef& b);

  // Exact comparison when both sides are exact, otherwise bitwise on the
  // stored doubles.
  friend bool operator==(const Coef& a, const Coef& b);

  std::string str() const;

 private:
  std::complex<double> value_{0.0, 0.0};
  std::optional<Rational> exact_{Rational(0, 1)};
};

}  // namespace subfox
