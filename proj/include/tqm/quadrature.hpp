#pragma once

#include <complex>
#include <functional>

namespace tqm::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;   // Gauss-Kronrod error estimate
  double l1 = 0.0;      // integral of |f|, for relative tolerance checks
};

/// Adaptive 61-point Gauss-Kronrod on [a, b]; either bound may be infinite.
/// Throws Error(no_convergence) when the error estimate exceeds
/// max(abs_tol, rel_tol * l1).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 0.0, unsigned max_depth = 20);

struct ComplexResult {
  std::complex<double> value;
  double error = 0.0;
};

/// Integrates real and imaginary parts separately; the tolerance applies to
/// the combined error against the combined L1 norm.
ComplexResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                double b, double rel_tol = 1e-12, double abs_tol = 0.0,
                                unsigned max_depth = 20);

}  // namespace tqm::quad
