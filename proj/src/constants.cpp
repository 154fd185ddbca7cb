#include "tqm/constants.hpp"

#include <array>
#include <utility>

#include "tqm/error.hpp"

namespace tqm {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::singular: return "singular";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::negative_variance: return "negative_variance";
    case ErrorKind::no_convergence: return "no_convergence";
    case ErrorKind::unsupported: return "unsupported";
  }
  return "unknown";
}

const PhysicalConstants& constants() {
  static const PhysicalConstants k{};
  return k;
}

double bohr_time(const PhysicalConstants& k) {
  return k.hbar_eV_as / (k.alpha * k.m_e);
}

double heisenberg_time(double delta_E_eV, const PhysicalConstants& k) {
  if (!(delta_E_eV > 0.0)) {
    throw Error(ErrorKind::degenerate, "heisenberg_time: energy spread must be positive");
  }
  return k.hbar_eV_as / (2.0 * delta_E_eV);
}

namespace {

enum class Dimension { energy, time, length };

struct UnitInfo {
  Unit unit;
  std::string_view name;
  Dimension dim;
  double to_base;  // factor into eV, as or pm
};

constexpr std::array<UnitInfo, 6> kUnits{{
    {Unit::eV, "eV", Dimension::energy, 1.0},
    {Unit::MeV, "MeV", Dimension::energy, 1e6},
    {Unit::as, "as", Dimension::time, 1.0},
    {Unit::ys, "ys", Dimension::time, 1e-6},
    {Unit::pm, "pm", Dimension::length, 1.0},
    {Unit::fm, "fm", Dimension::length, 1e-3},
}};

const UnitInfo& info(Unit u) {
  for (const auto& i : kUnits) {
    if (i.unit == u) return i;
  }
  throw Error(ErrorKind::unsupported, "unknown unit");
}

// Atomic-scale and nuclear-scale triples; cross-dimension maps stay inside one.
constexpr std::array<std::pair<Unit, Unit>, 9> kPairs{{
    {Unit::eV, Unit::as},
    {Unit::pm, Unit::as},
    {Unit::eV, Unit::pm},
    {Unit::fm, Unit::ys},
    {Unit::MeV, Unit::fm},
    {Unit::MeV, Unit::ys},
    {Unit::eV, Unit::MeV},
    {Unit::as, Unit::ys},
    {Unit::pm, Unit::fm},
}};

bool supported(Unit a, Unit b) {
  if (a == b) return true;
  for (const auto& [x, y] : kPairs) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

}  // namespace

std::string_view unit_name(Unit u) { return info(u).name; }

Unit parse_unit(std::string_view name) {
  for (const auto& i : kUnits) {
    if (i.name == name) return i.unit;
  }
  throw Error(ErrorKind::unsupported, "unknown unit '" + std::string(name) + "'");
}

double convert(double value, Unit from, Unit to, const PhysicalConstants& k) {
  if (!supported(from, to)) {
    throw Error(ErrorKind::unsupported, "unsupported conversion " + std::string(unit_name(from)) +
                                            " -> " + std::string(unit_name(to)));
  }
  const UnitInfo& a = info(from);
  const UnitInfo& b = info(to);
  const double base = value * a.to_base;
  double out = 0.0;
  if (a.dim == b.dim) {
    out = base;
  } else if (a.dim == Dimension::energy || b.dim == Dimension::energy) {
    // reciprocal maps: t = hbar / E, x = hbar c / E (and their inverses)
    const Dimension other = a.dim == Dimension::energy ? b.dim : a.dim;
    const double scale = other == Dimension::time ? k.hbar_eV_as : k.hbar_c_eV_pm();
    if (base == 0.0) {
      throw Error(ErrorKind::singular, "reciprocal conversion of zero");
    }
    out = scale / base;
  } else if (a.dim == Dimension::length) {
    out = base / k.c_pm_per_as;
  } else {
    out = base * k.c_pm_per_as;
  }
  return out / b.to_base;
}

std::vector<NamedConstant> constant_table(const PhysicalConstants& k) {
  return {
      {"alpha", k.alpha, "1"},
      {"inverse_alpha", 1.0 / k.alpha, "1"},
      {"m_e", k.m_e, "eV"},
      {"m_p", k.m_p, "eV"},
      {"hbar_eV_as", k.hbar_eV_as, "eV*as"},
      {"c_pm_per_as", k.c_pm_per_as, "pm/as"},
      {"a0_pm", k.a0_pm, "pm"},
      {"a0_as", k.a0_as(), "as"},
      {"bohr_time_as", bohr_time(k), "as"},
      {"rydberg_energy_eV", 0.5 * k.alpha * k.alpha * k.m_e, "eV"},
      {"proton_radius_fm", k.proton_radius_fm, "fm"},
  };
}

}  // namespace tqm
