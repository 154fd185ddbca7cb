#pragma once

#include <complex>
#include <string_view>

#include "json.hpp"

namespace tqm {

enum class Domain { time, energy, space, momentum };

std::string_view to_string(Domain d);
Domain parse_domain(std::string_view name);

/// A normalized one-dimensional Gaussian test function.
///
/// Time:     (1/(pi s^2))^{1/4} exp(-i c t - (t - x0)^2 / 2s^2)
/// Energy:   (1/(pi s^2))^{1/4} exp(+i c (E - x0) - (E - x0)^2 / 2s^2)
/// Space:    (1/(pi s^2))^{1/4} exp(+i c x - (x - x0)^2 / 2s^2)
/// Momentum: (1/(pi s^2))^{1/4} exp(-i c (p - x0) - (p - x0)^2 / 2s^2)
///
/// where x0 = center, c = carrier, s = sigma. For time the carrier is the
/// mean energy E0; for energy the carrier is the time offset t0 (and the same
/// for space/momentum). Time/energy use f(t) = (2pi)^{-1/2} int dw e^{-iwt} f(w);
/// space/momentum use the opposite sign.
struct GaussianPacket {
  Domain domain = Domain::time;
  double center = 0.0;
  double carrier = 0.0;
  double sigma = 1.0;

  /// Throws Error(degenerate) unless sigma is finite and positive.
  static GaussianPacket make(Domain domain, double center, double carrier, double sigma);

  std::complex<double> operator()(double x) const;
  double density(double x) const;

  friend bool operator==(const GaussianPacket&, const GaussianPacket&) = default;
};

/// Packet in the conjugate domain: sigma -> 1/sigma, center and carrier swapped.
GaussianPacket fourier_pair(const GaussianPacket& p);

/// sigma / sqrt(2): the root-mean-square spread of |psi|^2.
double uncertainty(const GaussianPacket& p);
double uncertainty(double sigma);

/// Mean energy and second moment; the variance must be strictly positive.
struct EntropicConstraints {
  double mean_energy = 0.0;           // eV
  double energy_second_moment = 0.0;  // eV^2

  static EntropicConstraints from_uncertainty(double mean_energy, double delta_E);
  double variance() const { return energy_second_moment - mean_energy * mean_energy; }
};

/// Maximum-entropy packet in energy: center <E>, sigma_E = sqrt(2) dE.
GaussianPacket entropic_packet(const EntropicConstraints& c);

/// Gaussian convolution adds variances.
double convolve_dispersions(double sigma_a2, double sigma_b2);

void to_json(nlohmann::json& j, const GaussianPacket& p);
void from_json(const nlohmann::json& j, GaussianPacket& p);

}  // namespace tqm
