#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "tqm/bound.hpp"
#include "tqm/constants.hpp"
#include "tqm/error.hpp"
#include "tqm/photon.hpp"

using namespace tqm;
using namespace tqm::photon;
using namespace std::complex_literals;
using cplx = std::complex<double>;
using std::numbers::pi;

TEST_CASE("contour residues") {
  for (double kappa : {0.5, 1.0, 2.0, 5.0}) {
    for (double tau : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      const auto r = residue_check(kappa, tau);
      const double analytic = -(2 * pi / kappa) * std::sin(kappa * tau);
      CHECK(r.analytic.real() == doctest::Approx(analytic).epsilon(1e-15));
      CHECK(r.abs_error / std::abs(analytic) < 1e-6);
      CHECK(std::abs(r.numeric.imag()) < 1e-6 * std::abs(analytic));
      CHECK(r.radius > std::hypot(kappa, r.indent));
      CHECK(r.indent > 0.0);
    }
  }
  CHECK_THROWS_AS(residue_check(0.0, 1.0), Error);
  CHECK_THROWS_AS(residue_check(1.0, -1.0), Error);
}

TEST_CASE("retarded shell") {
  const double r = 2.0;
  CHECK(retarded_shell(r, -0.1) == 0.0);
  const double w = r / 1000;
  const double total = oracle::simpson([&](double t) { return retarded_shell(r, t); }, r - 12 * w,
                                       r + 12 * w, 2000);
  CHECK(total == doctest::Approx(1.0 / (4 * pi * r)).epsilon(1e-9));

  auto g = [](double t) { return std::cos(3.0 * t) + t * t; };
  const double full = shell_expectation(r, g);
  const double half = shell_expectation(r, g, r / 2000);
  CHECK(full == doctest::Approx(g(r) / (4 * pi * r)).epsilon(1e-4));
  CHECK(std::abs(half - full) / std::abs(full) < 1e-3);
  CHECK_THROWS_AS(retarded_shell(0.0, 1.0), Error);
}

TEST_CASE("Bessel-form Green's function") {
  const double tau = 1.3;
  // Against a power-series J0 and the unsimplified printed form,
  // -i sqrt(2pi) (|tau - 2t| + 2t - tau) J0(kappa sqrt(tau) sqrt|tau - 2t|) / (8t - 4tau).
  for (double kappa : {0.4, 1.0, 2.5}) {
    for (double t : {-1.0, 0.2, 0.7, 1.3, 2.0, 4.5}) {
      const double d = std::abs(tau - 2 * t);
      const cplx raw = -1i * std::sqrt(2 * pi) * (d + 2 * t - tau) *
                       oracle::j0_series(kappa * std::sqrt(tau) * std::sqrt(d)) / (8 * t - 4 * tau);
      INFO("kappa=" << kappa << " t=" << t);
      CHECK(std::abs(bessel_greens(t, kappa, tau) - raw) < 1e-12);
    }
  }
  // Support starts at t_tau = -tau/2 inclusive.
  CHECK(bessel_greens(tau / 2 - 1e-9, 1.0, tau) == cplx(0.0));
  CHECK(std::abs(bessel_greens(tau / 2, 1.0, tau) - (-1i * std::sqrt(pi / 2))) < 1e-15);
}

TEST_CASE("Bessel form oscillates like the standard sine at t_tau = 0") {
  // Zeros in kappa of G(t = tau) sit at j_{0,1} / tau.
  const double j01 = 2.404825557695773;
  for (double tau : {0.5, 1.0, 3.0}) {
    double lo = 1.0 / tau, hi = 3.0 / tau;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double f_lo = bessel_greens(tau, lo, tau).imag();
      const double f_mid = bessel_greens(tau, mid, tau).imag();
      ((f_lo < 0) == (f_mid < 0) ? lo : hi) = mid;
    }
    CHECK(0.5 * (lo + hi) * tau == doctest::Approx(j01).epsilon(1e-9));
  }
}

TEST_CASE("regulated space form") {
  // At t_tau = -tau/2 the Bessel argument vanishes and the regulated integral
  // is int k sin(k r) exp(-k^2/2s^2) dk = sqrt(pi/2) s^3 r exp(-r^2 s^2 / 2).
  const double tau = 1.0, r = 0.8;
  for (double s : {1.0, 2.0, 4.0}) {
    const cplx g = bessel_space_form(tau / 2, r, tau, s);
    const double integral = std::sqrt(pi / 2) * s * s * s * r * std::exp(-r * r * s * s / 2);
    const cplx expect = -2 * pi * 1i / r * (-1i * std::sqrt(pi / 2)) * integral;
    CHECK(std::abs(g - expect) < 1e-8 * std::abs(expect));
  }
  CHECK(bessel_space_form(0.0, r, tau, 2.0) == cplx(0.0));
}

TEST_CASE("pseudo-Euclidean expansion") {
  for (double r : {0.5, 1.0, 52.9}) {
    for (int i = 0; i < 50; ++i) {
      const double t = 0.5 * r * i / 49.0;
      const double diff = std::abs(pseudo_euclidean_potential(t, r) - pseudo_euclidean_quadratic(t, r));
      // Alternating-series remainder; independent restatement of the bound.
      const double x = t * t / (r * r);
      CHECK(diff <= 0.375 * x * x / r + 4e-16 / r);
      CHECK(expansion_bound(t, r) == doctest::Approx(0.375 * x * x / r));
    }
  }
  CHECK(pseudo_euclidean_potential(3.0, 4.0) == doctest::Approx(0.2));
  CHECK_THROWS_AS(pseudo_euclidean_potential(0.0, 0.0), Error);
  CHECK_THROWS_AS(pseudo_euclidean_quadratic(1.0, 0.0), Error);
}

TEST_CASE("kappa bar and photon dispersion") {
  const double a0 = bohr_time();
  CHECK(kappa_bar(a0) == doctest::Approx(1.0 / a0));
  CHECK(kappa_bar(2 * a0, 3.0) == doctest::Approx(0.5 * kappa_bar(a0, 3.0)));
  CHECK(photon_sigma2(a0) == doctest::Approx(a0 * a0).epsilon(1e-14));
  CHECK(photon_sigma2(a0, 4.0) == doctest::Approx(a0 * a0 / 4));
  CHECK(photon_sigma2(a0, 1.0, 2 * a0) == doctest::Approx(2 * a0 * a0));
  // Cross-check with the global oscillator.
  const double gho = bound::gho_estimate(bound::hydrogen()).sigma_t2;
  CHECK(std::abs(photon_sigma2(a0) / gho - 1.0) < 1e-12);
  CHECK_THROWS_AS(kappa_bar(0.0), Error);
}

TEST_CASE("quadratic-time Green's function") {
  const double r = 0.5, mu = 1.0;
  const double kb = mu / r, s2 = r * r / mu;
  for (double dt : {-0.3, 0.0, 0.2, 0.9}) {
    const auto g = quadratic_greens(dt, r, mu);
    CHECK(g.t_tau == dt);
    CHECK(g.tau == r);
    CHECK(g.kappa_bar == doctest::Approx(kb));
    const cplx expect = std::exp(-1i * kb * dt) * std::sqrt(1i / s2) * std::exp(1i * dt * dt / (2 * s2));
    CHECK(std::abs(g.value - expect) < 1e-14);
    CHECK(std::abs(g.value) == doctest::Approx(1.0 / std::sqrt(s2)));
    // The frequency-integral prefactor differs by sqrt(2 pi) in modulus.
    const auto f = quadratic_greens_fourier(dt, r, mu);
    CHECK(std::abs(g.value) / std::abs(f.value) == doctest::Approx(std::sqrt(2 * pi)));
    CHECK(std::arg(g.value / f.value) == doctest::Approx(0.0));
  }
}

TEST_CASE("proton source and initial photon packet") {
  const auto src = ProtonSource::from_radius(0.841);
  CHECK(src.sigma_t_ys == doctest::Approx(0.841e-15 / 2.99792458e8 * 1e24).epsilon(1e-12));
  CHECK(src.sigma_q_MeV == doctest::Approx(197.3269804 / 0.841).epsilon(1e-8));
  CHECK(std::abs(src.momentum_uncertainty_MeV / 117.5 - 1.0) < 5e-3);
  CHECK_THROWS_AS(ProtonSource::from_radius(0.0), Error);

  const auto pk = initial_photon_packet(src);
  CHECK(pk.packet.domain == Domain::energy);
  CHECK(pk.packet.center == 0.0);
  CHECK(pk.packet.sigma == doctest::Approx(std::sqrt(2.0) * src.sigma_q_MeV));
  CHECK(pk.amplitude(0.0) == 1.0);

  // Self-convolution of the source Gaussian exp(-E^2 / 2 sE^2), normalized at w = 0.
  const double sE = pk.source_sigma_E;
  auto conv = [&](double w) {
    return oracle::simpson(
        [&](double E) { return std::exp(-E * E / (2 * sE * sE)) * std::exp(-(w - E) * (w - E) / (2 * sE * sE)); },
        -14 * sE, 14 * sE, 4000);
  };
  const double c0 = conv(0.0);
  for (double w : {-300.0, -50.0, 120.0, 400.0}) {
    CHECK(conv(w) / c0 == doctest::Approx(pk.amplitude(w)).epsilon(1e-10));
    CHECK(pk.normalized(w) / pk.normalized(0.0) == doctest::Approx(pk.amplitude(w)).epsilon(1e-12));
  }
  const double norm = oracle::simpson([&](double w) { return std::pow(pk.normalized(w), 2); },
                                      -14 * pk.packet.sigma, 14 * pk.packet.sigma, 4000);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
}
