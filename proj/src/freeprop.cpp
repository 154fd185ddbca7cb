#include "tqm/freeprop.hpp"

#include <cmath>
#include <numbers>

#include "tqm/error.hpp"

namespace tqm {

using namespace std::complex_literals;
using cplx = std::complex<double>;

double clock_frequency(const FourMomentum& k, double m) {
  if (k.E == 0.0) {
    throw Error(ErrorKind::singular, "clock frequency is singular at E = 0");
  }
  return -(k.E * k.E - k.p2() - m * m) / (2.0 * k.E);
}

cplx kernel_momentum(const FourMomentum& k, double m, double tau) {
  if (tau < 0.0) return 0.0;
  if (tau == 0.0) return 1.0;
  return std::polar(1.0, -clock_frequency(k, m) * tau);
}

cplx kernel_time(double t2, double t1, double m, double tau) {
  if (tau < 0.0) return 0.0;
  if (tau == 0.0) {
    throw Error(ErrorKind::singular, "time kernel at tau = 0 is a delta function");
  }
  const double dt = t2 - t1;
  return std::sqrt(1i * m / (2.0 * std::numbers::pi * tau)) *
         std::polar(1.0, -m * dt * dt / (2.0 * tau));
}

cplx kernel_space(double x2, double x1, double m, double tau) {
  if (tau < 0.0) return 0.0;
  if (tau == 0.0) {
    throw Error(ErrorKind::singular, "space kernel at tau = 0 is a delta function");
  }
  const double dx = x2 - x1;
  return std::sqrt(m / (2.0 * std::numbers::pi * 1i * tau)) *
         std::polar(1.0, m * dx * dx / (2.0 * tau));
}

cplx kernel_4d(const std::array<double, 4>& x2, const std::array<double, 4>& x1, double m,
               double tau) {
  cplx k = kernel_time(x2[0], x1[0], m, tau);
  for (int i = 1; i < 4; ++i) k *= kernel_space(x2[i], x1[i], m, tau);
  return k * std::polar(1.0, -0.5 * m * tau);
}

cplx EvolvedPacket::operator()(double t) const {
  const double s2 = base.sigma * base.sigma;
  const double u = t - base.center - drift;
  const double norm = std::pow(std::numbers::pi * s2, -0.25);
  return norm / std::sqrt(f_tau) * phase * std::polar(1.0, -base.carrier * t) *
         std::exp(-u * u / (2.0 * s2 * f_tau));
}

double EvolvedPacket::density(double t) const { return std::norm((*this)(t)); }

double EvolvedPacket::spread_sigma2() const {
  const double s2 = base.sigma * base.sigma;
  const double r = tau / (spread_inertia * s2);
  return s2 * (1.0 + r * r);
}

EvolvedPacket evolve_gtf(const GaussianPacket& p, double m, double tau,
                         std::optional<double> spread_inertia) {
  if (p.domain != Domain::time) {
    throw Error(ErrorKind::invalid_argument, "evolve_gtf expects a time-domain packet");
  }
  if (!(m > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "evolve_gtf: mass must be positive");
  }
  if (!(p.sigma > 0.0)) {
    throw Error(ErrorKind::degenerate, "evolve_gtf: sigma must be positive");
  }
  const double inertia = spread_inertia.value_or(m);
  if (!(inertia > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "evolve_gtf: spread inertia must be positive");
  }
  EvolvedPacket out;
  out.base = p;
  out.mass = m;
  out.spread_inertia = inertia;
  return evolve_gtf(out, tau);
}

EvolvedPacket evolve_gtf(const EvolvedPacket& p, double tau2) {
  const double s2 = p.base.sigma * p.base.sigma;
  const double e0 = p.base.carrier;
  EvolvedPacket out = p;
  out.tau = p.tau + tau2;
  out.f_tau = p.f_tau - 1i * tau2 / (p.mass * s2);
  out.drift = p.drift + e0 * tau2 / p.mass;
  out.phase = p.phase * std::polar(1.0, e0 * e0 * tau2 / (2.0 * p.mass));
  return out;
}

CollimatedPhase collimated_kernel(const FourMomentum& k, double m, double mean_E, double tau) {
  if (!(mean_E > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "collimated_kernel: beam energy must be positive");
  }
  if (tau < 0.0) return {0.0, true};
  const double eb = mean_E;
  const double de = k.E - eb;
  const double M2 = m * m + k.p2();
  const double rate = (eb * eb - M2) / (2.0 * eb) + de * (eb * eb + M2) / (2.0 * eb * eb) -
                      de * de * M2 / (2.0 * eb * eb * eb);
  return {std::polar(1.0, rate * tau), std::abs(de) < 0.3 * eb};
}

}  // namespace tqm
