#pragma once

#include <array>
#include <complex>
#include <optional>

#include "tqm/wavepacket.hpp"

namespace tqm {

/// Off-shell four-momentum: coordinate energy E and three-momentum p.
struct FourMomentum {
  double E = 0.0;
  std::array<double, 3> p{};

  double p2() const { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }
};

/// Clock frequency -(E^2 - p^2 - m^2) / 2E; zero on shell.
double clock_frequency(const FourMomentum& k, double m);

/// Diagonal momentum-space kernel exp(-i varpi tau) theta(tau), identity at tau = 0.
std::complex<double> kernel_momentum(const FourMomentum& k, double m, double tau);

/// Time-only free kernel sqrt(i m / 2 pi tau) exp(-i m (t2 - t1)^2 / 2 tau).
/// Zero for tau < 0; throws Error(singular) at tau = 0 where it is a delta.
std::complex<double> kernel_time(double t2, double t1, double m, double tau);

/// Standard one-dimensional space kernel sqrt(m / 2 pi i tau) exp(i m (x2 - x1)^2 / 2 tau).
std::complex<double> kernel_space(double x2, double x1, double m, double tau);

/// Coordinate-space 4D kernel, the product of the time kernel, three space
/// kernels and the rest-mass phase exp(-i m tau / 2). Points are (t, x, y, z).
std::complex<double> kernel_4d(const std::array<double, 4>& x2, const std::array<double, 4>& x1,
                               double m, double tau);

/// A time-domain GTF after free evolution for clock time tau.
///
/// psi(t) = (1/(pi s^2))^{1/4} f^{-1/2}
///          exp(-i E0 t + i E0^2 tau / 2m - (t - t0 - E0 tau / m)^2 / (2 s^2 f))
/// with f = 1 - i tau / (m s^2).
struct EvolvedPacket {
  GaussianPacket base;                // time-domain packet at tau = 0
  double mass = 1.0;
  double tau = 0.0;
  std::complex<double> f_tau{1.0, 0.0};
  double drift = 0.0;                 // E0 tau / m
  std::complex<double> phase{1.0, 0.0};  // exp(i E0^2 tau / 2m)
  double spread_inertia = 1.0;        // m by default; E0 reproduces the printed density

  std::complex<double> operator()(double t) const;
  double density(double t) const;
  double mean() const { return base.center + drift; }
  /// sigma^2 (1 + tau^2 / (I^2 sigma^4)) with I = spread_inertia.
  double spread_sigma2() const;
};

/// Closed-form evolution. `spread_inertia` overrides the inertia used by
/// spread_sigma2(); the amplitude always uses m.
EvolvedPacket evolve_gtf(const GaussianPacket& p, double m, double tau,
                         std::optional<double> spread_inertia = std::nullopt);

/// Further evolution of an already evolved packet by tau2, composed in the
/// complex width: s^2 f -> s^2 f - i tau2 / m.
EvolvedPacket evolve_gtf(const EvolvedPacket& p, double tau2);

struct CollimatedPhase {
  std::complex<double> value;
  bool collimated = true;  // false when |E - mean_E| >= 0.3 mean_E
};

/// Second-order expansion of exp(-i varpi tau) about a beam energy mean_E:
/// exp(i [(Eb^2 - M^2)/2Eb + dE (Eb^2 + M^2)/2Eb^2 - dE^2 M^2/2Eb^3] tau)
/// with dE = E - Eb and M^2 = m^2 + p^2 (M = m for p = 0).
CollimatedPhase collimated_kernel(const FourMomentum& k, double m, double mean_E, double tau);

}  // namespace tqm
