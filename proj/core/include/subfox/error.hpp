#pragma once

#include <stdexcept>
#include <string>

namespace subfox {

// Root of every error the library throws. Callers that only care about
// "the computation could not be carried out" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (parameter range, sign, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A gamma argument sits on (or within 1e-12 of) a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Both sides of a gamma ratio are singular and no limit was requested.
class IndeterminateError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonPositiveSigmaError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The H-distribution CDF rewrite requires -b_j/B_j < 1 for j <= m.
class ProvisoViolatedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Transform argument outside its existence strip.
class StripError : public DomainError {
 public:
  StripError(const std::string& what, double lo, double hi)
      : DomainError(what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class MethodUnavailableError : public DomainError {
 public:
  using DomainError::DomainError;
};

class MixedKindError : public DomainError {
 public:
  using DomainError::DomainError;
};

// No vertical line separates the left and right pole families.
class EmptyStripError : public Error {
 public:
  using Error::Error;
};

// The requested abscissa does not lie in the admissible strip.
class ContourError : public Error {
 public:
  using Error::Error;
};

class NonConvergedError : public Error {
 public:
  NonConvergedError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  // Best available error (or tail) estimate at the point of failure.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class CoincidentPolesError : public Error {
 public:
  using Error::Error;
};

class DivergentSeriesError : public Error {
 public:
  using Error::Error;
};

// Throws DomainError if v is NaN or infinite. `what` names the quantity.
void require_finite(double v, const char* what);

}  // namespace subfox
