#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tqm/constants.hpp"

namespace tqm::bound {

/// Atom or orbital whose time dispersion is being estimated.
struct AtomSpec {
  std::string label = "hydrogen";
  double radius_pm = 52.917721;
  int n = 1;
  double mass_eV = 510998.95;
  int charge_z = 1;  // only Z = 1 is implemented
  bool reduced_mass = false;

  /// Mass entering the oscillator matching: m_e, or m_e m_p / (m_e + m_p).
  double effective_mass(const PhysicalConstants& k = constants()) const;
};

AtomSpec hydrogen(int n = 1, const PhysicalConstants& k = constants());
AtomSpec cesium(const PhysicalConstants& k = constants());
/// "hydrogen" (radius n^2 a0) or "cesium".
AtomSpec atom_by_name(std::string_view name, int n = 1, const PhysicalConstants& k = constants());

enum class Method { naive, entropic, gho, lho };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct DispersionEstimate {
  Method method = Method::naive;
  double sigma_t2 = 0.0;   // as^2
  double delta_t = 0.0;    // as, sqrt(sigma_t2 / 2)
  double delta_E = 0.0;    // eV, hbar / (2 delta_t)
  bool approximate = false;

  static DispersionEstimate from_sigma2(Method m, double sigma_t2,
                                        const PhysicalConstants& k = constants());
  static DispersionEstimate from_delta_t(Method m, double delta_t,
                                         const PhysicalConstants& k = constants());
  double sigma_t() const;
};

/// Delta t = r / c.
DispersionEstimate naive_estimate(const AtomSpec& a, const PhysicalConstants& k = constants());

struct MomentumMoments {
  double norm = 0.0;  // int |psi|^2 p^2 dp
  double p2 = 0.0;    // <p^2>, 1/a0^2
  double p4 = 0.0;    // <p^4>, 1/a0^4
};

/// Quadrature moments of the hydrogen ground state in momentum space,
/// psi(p) = sqrt(32/pi) / (1 + p^2)^2 with p in units of 1/a0.
MomentumMoments hydrogen_momentum_moments();

/// Delta E from the momentum moments, (1/2m) sqrt(<p4> - <p2>^2), in eV.
double entropic_delta_E(const MomentumMoments& mm, const AtomSpec& a,
                        const PhysicalConstants& k = constants());

/// Delta E = alpha^2 m, Delta t = hbar / (2 Delta E). The n = 1 hydrogen case
/// uses the quadrature moments; anything else is scaled and flagged approximate.
DispersionEstimate entropic_estimate(const AtomSpec& a, const PhysicalConstants& k = constants());

/// Omega = alpha^2 m in eV.
double gho_omega(const AtomSpec& a, const PhysicalConstants& k = constants());

/// sigma^2 = 1 / (m Omega) = a0^2.
DispersionEstimate gho_estimate(const AtomSpec& a, const PhysicalConstants& k = constants());

/// sigma^2 = sqrt(a0 r^3 / mu), r and result in light-time units (as, as^2).
double lho_sigma(double r_as, double mu, const AtomSpec& a, const PhysicalConstants& k = constants());

/// lho_sigma at the atom's radius.
DispersionEstimate lho_estimate(const AtomSpec& a, double mu = 1.0,
                                const PhysicalConstants& k = constants());

/// sigma scaled by n^{3/2}, i.e. sigma^2 by n^3.
DispersionEstimate rydberg_scaling(int n, const DispersionEstimate& base,
                                   const PhysicalConstants& k = constants());

/// (1 / pi sigma^2)^{1/4} exp(-t^2 / 2 sigma^2) with sigma^2 = lho_sigma(r, mu).
double lho_wavefunction(double t_as, double r_as, double mu,
                        const AtomSpec& a = AtomSpec{}, const PhysicalConstants& k = constants());

DispersionEstimate estimate(const AtomSpec& a, Method m, double mu = 1.0,
                            const PhysicalConstants& k = constants());

struct Candidate {
  std::string name;
  double delta_t_as = 0.0;
  std::string basis;
};

/// Cesium valence dispersion: the published values next to the scalings
/// that could have produced them. No candidate is selected.
struct CesiumReport {
  double claimed_naive_as = 0.887;
  double claimed_scaled_as = 3.0;
  std::vector<Candidate> candidates;
};

CesiumReport cesium_report(const PhysicalConstants& k = constants());

}  // namespace tqm::bound
