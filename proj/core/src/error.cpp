#include "subfox/error.hpp"

#include <cmath>

namespace subfox {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace subfox
