#include "tqm/wavepacket.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tqm/error.hpp"

namespace tqm {

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::time: return "time";
    case Domain::energy: return "energy";
    case Domain::space: return "space";
    case Domain::momentum: return "momentum";
  }
  return "time";
}

Domain parse_domain(std::string_view name) {
  for (Domain d : {Domain::time, Domain::energy, Domain::space, Domain::momentum}) {
    if (to_string(d) == name) return d;
  }
  throw Error(ErrorKind::invalid_argument, "unknown packet domain '" + std::string(name) + "'");
}

GaussianPacket GaussianPacket::make(Domain domain, double center, double carrier, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::degenerate, "packet dispersion must be finite and positive");
  }
  return {domain, center, carrier, sigma};
}

std::complex<double> GaussianPacket::operator()(double x) const {
  using namespace std::complex_literals;
  const double u = x - center;
  const double norm = std::pow(std::numbers::pi * sigma * sigma, -0.25);
  double phase = 0.0;
  switch (domain) {
    case Domain::time: phase = -carrier * x; break;
    case Domain::energy: phase = carrier * u; break;
    case Domain::space: phase = carrier * x; break;
    case Domain::momentum: phase = -carrier * u; break;
  }
  return norm * std::exp(-u * u / (2.0 * sigma * sigma)) * std::polar(1.0, phase);
}

double GaussianPacket::density(double x) const {
  const double u = x - center;
  return std::exp(-u * u / (sigma * sigma)) / (std::sqrt(std::numbers::pi) * sigma);
}

GaussianPacket fourier_pair(const GaussianPacket& p) {
  Domain conj = Domain::energy;
  switch (p.domain) {
    case Domain::time: conj = Domain::energy; break;
    case Domain::energy: conj = Domain::time; break;
    case Domain::space: conj = Domain::momentum; break;
    case Domain::momentum: conj = Domain::space; break;
  }
  return GaussianPacket::make(conj, p.carrier, p.center, 1.0 / p.sigma);
}

double uncertainty(double sigma) { return sigma / std::numbers::sqrt2; }

double uncertainty(const GaussianPacket& p) { return uncertainty(p.sigma); }

EntropicConstraints EntropicConstraints::from_uncertainty(double mean_energy, double delta_E) {
  return {mean_energy, mean_energy * mean_energy + delta_E * delta_E};
}

GaussianPacket entropic_packet(const EntropicConstraints& c) {
  const double var = c.variance();
  if (var < 0.0) {
    throw Error(ErrorKind::invalid_argument, "energy second moment below mean squared");
  }
  // Cancellation in <E^2> - <E>^2 leaves a few ulps of <E^2>; treat that as zero.
  if (var <= 8.0 * std::numeric_limits<double>::epsilon() * c.energy_second_moment) {
    throw Error(ErrorKind::degenerate, "zero energy variance gives a delta-function packet");
  }
  return GaussianPacket::make(Domain::energy, c.mean_energy, 0.0,
                              std::numbers::sqrt2 * std::sqrt(var));
}

double convolve_dispersions(double sigma_a2, double sigma_b2) {
  if (sigma_a2 < 0.0 || sigma_b2 < 0.0) {
    throw Error(ErrorKind::invalid_argument, "dispersions must be non-negative");
  }
  return sigma_a2 + sigma_b2;
}

void to_json(nlohmann::json& j, const GaussianPacket& p) {
  j = nlohmann::json{{"domain", std::string(to_string(p.domain))},
                     {"center", p.center},
                     {"carrier", p.carrier},
                     {"sigma", p.sigma}};
}

void from_json(const nlohmann::json& j, GaussianPacket& p) {
  p = GaussianPacket::make(parse_domain(j.at("domain").get<std::string>()),
                           j.at("center").get<double>(), j.at("carrier").get<double>(),
                           j.at("sigma").get<double>());
}

}  // namespace tqm
