#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tqm/constants.hpp"
#include "tqm/freeprop.hpp"
#include "tqm/wavepacket.hpp"

namespace tqm {

/// Uniform lattice t_i = t_min + i dt, i < n. n must be a power of two >= 16.
struct GridSpec {
  double t_min = 0.0;
  double dt = 1.0;
  std::size_t n = 16;

  static GridSpec centered(double center, double half_width, std::size_t n);
  double t(std::size_t i) const { return t_min + static_cast<double>(i) * dt; }
  double t_max() const { return t(n - 1); }
};

/// Sampled amplitude on a GridSpec. Immutable; stepping returns a new state.
class GridState {
 public:
  GridState(GridSpec spec, std::vector<std::complex<double>> samples, bool aliased = false);

  const GridSpec& spec() const { return spec_; }
  std::span<const std::complex<double>> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double t(std::size_t i) const { return spec_.t(i); }

  /// Discrete L2 norm sum |psi_i|^2 dt.
  double norm() const;
  /// Set when a step found spectral power near Nyquist.
  bool aliased() const { return aliased_; }

 private:
  GridSpec spec_;
  std::vector<std::complex<double>> samples_;
  bool aliased_ = false;
};

/// Sizing rule for propagating p for clock time tau with inertia m: spans
/// +-(8 sigma + 8 |drift| + 8 spread(tau)) about the center with the carrier
/// below a quarter of Nyquist and the spectrum inside Nyquist.
GridSpec grid_for(const GaussianPacket& p, double m, double tau);

/// Pointwise samples of a time-domain packet. Throws Error(truncation) when
/// the grid does not cover +-8 sigma about the center.
GridState sample_packet(const GaussianPacket& p, const GridSpec& spec);
GridState sample_packet(const EvolvedPacket& p, const GridSpec& spec);

/// One exact free slice of width epsilon: forward transform, multiply each
/// energy bin by exp(i E^2 epsilon / 2m), transform back.
GridState step_once(const GridState& s, double m, double epsilon);

/// `slices` consecutive steps of width tau / slices.
GridState propagate(const GridState& s, double m, double tau, std::size_t slices);

/// Direct real-space convolution with kernel_time; O(n^2), non-periodic.
/// Accurate only while m * (t_max - t_min) * dt / epsilon stays well below pi.
GridState step_real_space(const GridState& s, double m, double epsilon);

struct Spectrum {
  std::vector<double> energy;                    // ascending
  std::vector<std::complex<double>> amplitude;   // (2pi)^{-1/2} int dt e^{iEt} psi(t)
};

/// Energy-domain samples of a grid state under the time/energy convention.
Spectrum spectrum(const GridState& s);

/// Max |rho_grid(t_i) - rho_exact(t_i)| over the lattice.
double max_density_error(const GridState& s, const EvolvedPacket& exact);

/// Least-squares slope of log(error) against log(x).
double loglog_slope(std::span<const std::pair<std::size_t, double>> points);

struct ConvergenceReport {
  std::string variable;  // "slices" or "grid_points"
  std::vector<std::pair<std::size_t, double>> steps;
  double order_estimate = 0.0;
};

/// Errors against evolve_gtf for each slice count on the grid_for lattice.
ConvergenceReport convergence_study(const GaussianPacket& p, double m, double tau,
                                    std::span<const std::size_t> slice_counts);

/// Errors against evolve_gtf for each lattice size over a fixed window of
/// +-half_width about the packet center (one slice).
ConvergenceReport resolution_study(const GaussianPacket& p, double m, double tau,
                                   double half_width, std::span<const std::size_t> grid_sizes);

void write_csv(std::ostream& os, const ConvergenceReport& r);

/// hbar / tau in eV: off-shell frequency width beyond which contributions
/// cancel for a flight of clock time tau (as).
double suppression_scale(double tau_as, const PhysicalConstants& k = constants());

struct SuppressionFactor {
  std::complex<double> value;  // exp(-i varpi tau / hbar)
  double phase = 0.0;          // varpi tau / hbar with varpi = ((kappa + dw)^2 - kappa^2) / 2 kappa
  double linear_phase = 0.0;   // dw tau / hbar
};

/// Off-shell phase for a frequency dw (eV) away from kappa (eV) after tau (as).
SuppressionFactor suppression_factor(double delta_w_eV, double kappa_eV, double tau_as,
                                     const PhysicalConstants& k = constants());

/// One entry of the pinned propagation matrix.
struct PropagationCase {
  double sigma_t = 1.0;
  double tau_factor = 1.0;  // tau = tau_factor * m * sigma_t^2
  double mass = 1.0;
  double carrier = 1.0;     // E0
  std::size_t slices = 8;

  double tau() const { return tau_factor * mass * sigma_t * sigma_t; }
  std::string name() const;
};

struct PropagationResult {
  PropagationCase input;
  std::size_t grid_points = 0;
  double max_error = 0.0;            // density, absolute
  double max_norm_drift = 0.0;       // per slice
  bool aliased = false;
  bool passed = false;
};

inline constexpr double kDensityTolerance = 1e-6;
inline constexpr double kNormDriftTolerance = 1e-9;

/// sigma_t in {0.5, 1, 2}, tau in {0.1, 1, 5} m sigma_t^2, m = 1, E0 = 1.
std::vector<PropagationCase> default_matrix();

PropagationResult run_case(const PropagationCase& c);

/// Runs every case on the sweep pool; results are in input order.
std::vector<PropagationResult> run_matrix(const std::vector<PropagationCase>& cases,
                                          std::size_t threads);

}  // namespace tqm
