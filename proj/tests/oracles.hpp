#pragma once

// Reference implementations used only by the tests. None of these call into
// the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

// J0 by its power series; accurate to ~1e-14 for |x| < 12.
inline double j0_series(double x) {
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 5) break;
  }
  return sum;
}

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
auto simpson(F f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  auto s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * (h / 3.0);
}

// int_0^inf p^{2a} / (1 + p^2)^4 dp = B(a + 1/2, 7/2 - a) / 2.
inline double radial_moment(int a) { return 0.5 * std::beta(a + 0.5, 3.5 - a); }

// Unnormalized normal density.
inline double gauss(double x, double mean, double var) {
  return std::exp(-0.5 * (x - mean) * (x - mean) / var) / std::sqrt(2.0 * std::numbers::pi * var);
}

// Closed-form free GTF in time, written out independently:
// (pi s^2)^{-1/4} (1 - i tau/(m s^2))^{-1/2}
//   exp(-i E0 t + i E0^2 tau/2m - (t - t0 - E0 tau/m)^2 / (2 s^2 (1 - i tau/(m s^2))))
inline std::complex<double> free_gtf(double t, double t0, double E0, double s, double m,
                                     double tau) {
  using namespace std::complex_literals;
  const std::complex<double> f = 1.0 - 1i * tau / (m * s * s);
  const double u = t - t0 - E0 * tau / m;
  return std::pow(std::numbers::pi * s * s, -0.25) / std::sqrt(f) *
         std::exp(-1i * E0 * t + 1i * E0 * E0 * tau / (2.0 * m) - u * u / (2.0 * s * s * f));
}

}  // namespace oracle
