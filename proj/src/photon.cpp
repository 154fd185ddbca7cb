#include "tqm/photon.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tqm/error.hpp"
#include "tqm/quadrature.hpp"

namespace tqm::photon {

using namespace std::complex_literals;
using cplx = std::complex<double>;
using std::numbers::pi;

ResidueCheck residue_check(double kappa, double tau) {
  if (!(kappa > 0.0) || !(tau > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "residue_check needs kappa > 0 and tau > 0");
  }
  ResidueCheck out;
  // Keep |exp(-i w tau)| <= e on the displaced segment.
  out.indent = std::min(0.5 * kappa, 1.0 / tau);
  out.radius = 2.0 * std::hypot(kappa, out.indent);
  out.analytic = -(2.0 * pi / kappa) * std::sin(kappa * tau);

  const double d = out.indent;
  const double R = out.radius;
  auto h = [&](cplx w) { return std::exp(-1i * w * tau) / (w * w - kappa * kappa); };
  auto on_segment = [&](double x) { return h(cplx{x, d}); };
  // w = i d + R e^{i theta}, theta from 0 down to -pi.
  auto on_arc = [&](double theta) {
    const cplx e = std::polar(1.0, theta);
    return h(1i * d + R * e) * (1i * R * e);
  };

  cplx segment = 0.0;
  cplx arc = 0.0;
  const char* stage = "segment";
  try {
    for (auto [a, b] : {std::pair{-R, -kappa}, std::pair{-kappa, kappa}, std::pair{kappa, R}}) {
      segment += quad::integrate_complex(on_segment, a, b, 1e-13, 1e-15).value;
    }
    stage = "arc";
    arc = -quad::integrate_complex(on_arc, -pi, 0.0, 1e-13, 1e-15).value;
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << "residue_check(kappa=" << kappa << ", tau=" << tau << ") failed on " << stage
        << " with indent " << d << ", radius " << R << ", segment so far " << segment << ": "
        << e.what();
    throw Error(ErrorKind::no_convergence, msg.str());
  }
  out.numeric = segment + arc;
  out.abs_error = std::abs(out.numeric - out.analytic);
  return out;
}

double retarded_shell(double r, double tau, std::optional<double> width) {
  if (!(r > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "retarded_shell: r must be positive");
  }
  if (tau < 0.0) return 0.0;
  const double w = width.value_or(r / 1000.0);
  if (!(w > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "retarded_shell: width must be positive");
  }
  const double u = (tau - r) / w;
  return std::exp(-0.5 * u * u) / (std::sqrt(2.0 * pi) * w) / (4.0 * pi * r);
}

double shell_expectation(double r, const std::function<double(double)>& g,
                         std::optional<double> width) {
  const double w = width.value_or(r / 1000.0);
  // In units of the width, so the rule is not working at roundoff level.
  auto f = [&](double u) { return retarded_shell(r, r + w * u, w) * g(r + w * u) * w; };
  return quad::integrate(f, std::max(-12.0, -r / w), 12.0, 1e-12).value;
}

cplx bessel_greens(double t, double kappa, double tau) {
  if (!(tau > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "bessel_greens: tau must be positive");
  }
  const double t_tau = t - tau;
  if (tau + 2.0 * t_tau < 0.0) return 0.0;
  const double b = tau * std::sqrt(std::abs(1.0 + 2.0 * t_tau / tau));
  return -1i * std::sqrt(pi / 2.0) * std::cyl_bessel_j(0.0, kappa * b);
}

cplx bessel_space_form(double t, double r, double tau, double regulator) {
  if (!(r > 0.0) || !(regulator > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "bessel_space_form: r and regulator must be positive");
  }
  const cplx g0 = bessel_greens(t, 1.0, tau);
  if (g0 == 0.0) return 0.0;
  auto f = [&](double k) {
    return k * std::sin(k * r) * bessel_greens(t, k, tau) *
           std::exp(-0.5 * k * k / (regulator * regulator));
  };
  const cplx integral = quad::integrate_complex(f, 0.0, 12.0 * regulator, 1e-10, 1e-14).value;
  return -2.0 * pi * 1i / r * integral;
}

double pseudo_euclidean_potential(double t, double r) {
  if (t == 0.0 && r == 0.0) {
    throw Error(ErrorKind::singular, "pseudo-Euclidean potential is singular at d = 0");
  }
  if (r == 0.0) {
    throw Error(ErrorKind::singular, "pseudo-Euclidean potential requires r > 0");
  }
  return 1.0 / std::hypot(t, r);
}

double pseudo_euclidean_quadratic(double t, double r) {
  if (r == 0.0) {
    throw Error(ErrorKind::singular, "quadratic expansion requires r > 0");
  }
  return 1.0 / r - t * t / (2.0 * r * r * r);
}

double expansion_bound(double t, double r) {
  const double x = t * t / (r * r);
  return 0.375 * x * x / r;
}

double kappa_bar(double r, double mu) {
  if (!(r > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "kappa_bar: r must be positive");
  }
  return mu / r;
}

double photon_sigma2(double r, double mu, std::optional<double> tau) {
  if (!(mu > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "photon_sigma2: mu must be positive");
  }
  return tau.value_or(r) / kappa_bar(r, mu);
}

namespace {

PhotonGreens greens_point(double dt, double r, double mu, std::optional<double> tau) {
  PhotonGreens g;
  g.t_tau = dt;
  g.r = r;
  g.tau = tau.value_or(r);
  if (!(g.tau > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "quadratic_greens: tau must be positive");
  }
  g.kappa_bar = kappa_bar(r, mu);
  return g;
}

}  // namespace

PhotonGreens quadratic_greens(double dt, double r, double mu, std::optional<double> tau) {
  PhotonGreens g = greens_point(dt, r, mu, tau);
  const double s2 = photon_sigma2(r, mu, g.tau);
  g.value = std::polar(1.0, -g.kappa_bar * dt) * std::sqrt(1i / s2) *
            std::polar(1.0, dt * dt / (2.0 * s2));
  return g;
}

PhotonGreens quadratic_greens_fourier(double dt, double r, double mu, std::optional<double> tau) {
  PhotonGreens g = greens_point(dt, r, mu, tau);
  const double kb = g.kappa_bar;
  g.value = std::polar(1.0, -kb * dt) * std::sqrt(1i * kb / (2.0 * pi * g.tau)) *
            std::polar(1.0, dt * dt * kb / (2.0 * g.tau));
  return g;
}

ProtonSource ProtonSource::from_radius(double radius_fm, const PhysicalConstants& k) {
  if (!(radius_fm > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "proton radius must be positive");
  }
  ProtonSource s;
  s.radius_fm = radius_fm;
  s.sigma_t_ys = convert(radius_fm, Unit::fm, Unit::ys, k);
  s.sigma_q_MeV = convert(radius_fm, Unit::fm, Unit::MeV, k);
  s.momentum_uncertainty_MeV = 0.5 * s.sigma_q_MeV;
  return s;
}

double PhotonPacket::amplitude(double w) const {
  return std::exp(-w * w / (4.0 * source_sigma_E * source_sigma_E));
}

double PhotonPacket::normalized(double w) const { return packet(w).real(); }

PhotonPacket initial_photon_packet(const ProtonSource& src) {
  if (!(src.sigma_q_MeV > 0.0)) {
    throw Error(ErrorKind::degenerate, "proton source has no energy dispersion");
  }
  // Energy dispersion equals the momentum dispersion for the source.
  const double sigma_E = src.sigma_q_MeV;
  return {GaussianPacket::make(Domain::energy, 0.0, 0.0, std::numbers::sqrt2 * sigma_E), sigma_E};
}

}  // namespace tqm::photon
