#include "tqm/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "tqm/error.hpp"

namespace tqm::quad {

namespace {

Result raw(const std::function<double(double)>& f, double a, double b, double rel_tol,
           unsigned max_depth) {
  using boost::math::quadrature::gauss_kronrod;
  Result r;
  r.value = gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, rel_tol, &r.error, &r.l1);
  return r;
}

// Boost reports an estimate a little above tolerance on converged smooth
// integrands; a factor of ten separates that from genuine failure.
void require(bool finite, double error, double allowed, double a, double b, double estimate) {
  if (!finite || error > 10.0 * allowed) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << estimate
        << ", error " << error << ", allowed " << allowed;
    throw Error(ErrorKind::no_convergence, msg.str());
  }
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_tol, unsigned max_depth) {
  const Result r = raw(f, a, b, rel_tol, max_depth);
  require(std::isfinite(r.value), r.error, std::max(abs_tol, rel_tol * r.l1), a, b, r.value);
  return r;
}

ComplexResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                double b, double rel_tol, double abs_tol, unsigned max_depth) {
  const Result re = raw([&](double x) { return f(x).real(); }, a, b, rel_tol, max_depth);
  const Result im = raw([&](double x) { return f(x).imag(); }, a, b, rel_tol, max_depth);
  const std::complex<double> v{re.value, im.value};
  const double err = std::hypot(re.error, im.error);
  require(std::isfinite(re.value) && std::isfinite(im.value), err,
          std::max(abs_tol, rel_tol * (re.l1 + im.l1)), a, b, std::abs(v));
  return {v, err};
}

}  // namespace tqm::quad
