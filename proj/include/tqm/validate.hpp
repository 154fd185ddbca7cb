#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tqm::validate {

struct CaseResult {
  std::string suite;
  std::string name;
  double max_error = 0.0;   // relative unless the suite says otherwise
  double tolerance = 0.0;
  bool passed = false;
};

/// kappa in {0.5, 1, 2, 5} x tau in {0.1, 0.5, 1, 2, 3}; relative error < 1e-6.
std::vector<CaseResult> residue_suite();
/// Norm, <p^2>, <p^4> and the entropic Delta E against alpha^2 m.
std::vector<CaseResult> moment_suite();
/// Pinned propagation matrix; max_error is the absolute density error.
std::vector<CaseResult> propagation_suite(std::size_t threads);
/// 50 points on [0, r/2]; max_error is the worst |exact - quadratic| / bound.
std::vector<CaseResult> taylor_suite();
/// lho_sigma(a0, mu) against the GHO sigma^2; passes only for mu = 1.
std::vector<CaseResult> mu_calibration_suite(double mu = 1.0);

std::vector<CaseResult> all(std::size_t threads, double mu = 1.0);

}  // namespace tqm::validate
