#pragma once

#include <string>
#include <vector>

#include "subfox/report.hpp"

namespace subfox {

enum class TolProfile { standard, strict };

struct VerifyOptions {
  TolProfile profile = TolProfile::standard;
  // Relative perturbation applied to every computed value before it is
  // compared; a harness check that failures are detected.
  double perturb = 0.0;
};

// gamma, hfun, wright, stable, inverse, tempered, algebra.
const std::vector<std::string>& verify_suites();

// Runs one suite (or "all"). Throws DomainError for an unknown name. A case
// whose computation throws is reported as failed with NaN values.
std::vector<OracleReport> run_verify_suite(const std::string& suite,
                                           const VerifyOptions& options = {});

}  // namespace subfox
