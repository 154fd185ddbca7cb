#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tqm {

/// Physical constants in natural units (hbar = c = eps0 = 1) together with
/// the factors used to present results in eV, attoseconds and picometers.
struct PhysicalConstants {
  double alpha = 1.0 / 137.035999;          // fine-structure constant
  double m_e = 510998.95;                   // electron mass, eV
  double m_p = 938272088.16;                // proton mass, eV
  double hbar_eV_as = 658.2119569;          // hbar, eV * as
  double c_pm_per_as = 299.792458;          // speed of light, pm / as
  double a0_pm = 52.917721;                 // Bohr radius, pm
  double proton_radius_fm = 0.841;          // proton charge radius, fm

  /// Bohr time a0/c in attoseconds from the measured Bohr radius.
  double a0_as() const { return a0_pm / c_pm_per_as; }
  /// hbar * c in eV * pm.
  double hbar_c_eV_pm() const { return hbar_eV_as * c_pm_per_as; }
};

/// The shared default set.
const PhysicalConstants& constants();

/// 1/(alpha m_e) expressed in attoseconds.
double bohr_time(const PhysicalConstants& k = constants());

/// hbar / (2 dE): minimum time uncertainty for an energy spread dE (eV).
double heisenberg_time(double delta_E_eV, const PhysicalConstants& k = constants());

enum class Unit { eV, MeV, as, ys, pm, fm };

std::string_view unit_name(Unit u);
Unit parse_unit(std::string_view name);

/// Converts between the conjugate presentation units. Energy <-> time and
/// energy <-> length are reciprocal maps (t = hbar/E, x = hbar c/E);
/// length <-> time divides by c. Throws Error(unsupported) otherwise.
double convert(double value, Unit from, Unit to, const PhysicalConstants& k = constants());

struct NamedConstant {
  std::string name;
  double value;
  std::string unit;
};

/// Name/value/unit rows for the `constants` subcommand.
std::vector<NamedConstant> constant_table(const PhysicalConstants& k = constants());

}  // namespace tqm
