#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "tqm/constants.hpp"
#include "tqm/wavepacket.hpp"

namespace tqm::photon {

/// Photon Green's function value with the point it was evaluated at.
/// Times and radii are in light-time units (as); kappa_bar in 1/as.
struct PhotonGreens {
  double t_tau = 0.0;
  double r = 0.0;
  double tau = 0.0;
  double kappa_bar = 0.0;
  std::complex<double> value;
};

struct ResidueCheck {
  std::complex<double> numeric;
  std::complex<double> analytic;  // -(2 pi / kappa) sin(kappa tau)
  double abs_error = 0.0;
  double indent = 0.0;            // height of the real-axis segment above the poles
  double radius = 0.0;            // radius of the closing lower semicircle
};

/// Integrates exp(-i w tau) / (w^2 - kappa^2) around a closed clockwise
/// contour: the real axis displaced by +i*indent, closed by a semicircle in
/// the lower half plane enclosing both poles. Throws Error(no_convergence)
/// with the partial sums when a segment fails.
ResidueCheck residue_check(double kappa, double tau);

/// Gaussian regularization of delta(tau - r) / (4 pi r), zero for tau < 0.
/// Width defaults to r / 1000.
double retarded_shell(double r, double tau, std::optional<double> width = std::nullopt);

/// int dtau shell(r, tau) g(tau); reduces to g(r) / (4 pi r) as the width shrinks.
double shell_expectation(double r, const std::function<double(double)>& g,
                         std::optional<double> width = std::nullopt);

/// a(t_tau) J0(kappa b(t_tau)) with t_tau = t - tau,
/// a = -i sqrt(pi/2) theta(tau + 2 t_tau), b = tau sqrt|1 + 2 t_tau / tau|.
std::complex<double> bessel_greens(double t, double kappa, double tau);

/// -2 pi i / r int_0^inf kappa dkappa sin(kappa r) G_tau(t, kappa) exp(-kappa^2 / 2 s^2).
/// The unregulated integral diverges; s is the supplied Gaussian regulator.
std::complex<double> bessel_space_form(double t, double r, double tau, double regulator);

/// 1 / sqrt(t^2 + r^2).
double pseudo_euclidean_potential(double t, double r);
/// 1/r - t^2 / 2r^3.
double pseudo_euclidean_quadratic(double t, double r);
/// (3/8) t^4 / r^5: alternating-series bound on the quadratic truncation for |t| < r.
double expansion_bound(double t, double r);

/// mu / r.
double kappa_bar(double r, double mu = 1.0);

/// tau / kappa_bar; equals r^2 / mu in the light-time gauge tau = r.
double photon_sigma2(double r, double mu = 1.0, std::optional<double> tau = std::nullopt);

/// exp(-i kbar dt) sqrt(i / s^2) exp(i dt^2 / 2 s^2), s^2 = tau / kbar, kbar = mu / r.
/// tau defaults to r.
PhotonGreens quadratic_greens(double dt, double r, double mu = 1.0,
                              std::optional<double> tau = std::nullopt);

/// Same phase with the prefactor sqrt(i kbar / 2 pi tau) of the frequency
/// integral; |value| = sqrt(kbar / 2 pi tau).
PhotonGreens quadratic_greens_fourier(double dt, double r, double mu = 1.0,
                                      std::optional<double> tau = std::nullopt);

/// Proton as a photon source.
struct ProtonSource {
  double radius_fm = 0.841;
  double sigma_t_ys = 0.0;                 // radius / c
  double sigma_q_MeV = 0.0;                // hbar c / radius
  double momentum_uncertainty_MeV = 0.0;   // hbar c / (2 radius)

  static ProtonSource from_radius(double radius_fm, const PhysicalConstants& k = constants());
};

struct PhotonPacket {
  GaussianPacket packet;       // energy domain, MeV; sigma = sqrt(2) sigma_E
  double source_sigma_E = 0.0; // MeV

  /// exp(-w^2 / (4 sigma_E^2)); equals 1 at w = 0.
  double amplitude(double w) const;
  /// Normalized counterpart for use as a regulator.
  double normalized(double w) const;
};

PhotonPacket initial_photon_packet(const ProtonSource& src);

}  // namespace tqm::photon
