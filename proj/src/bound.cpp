#include "tqm/bound.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tqm/error.hpp"
#include "tqm/quadrature.hpp"

namespace tqm::bound {

namespace {

void check(const AtomSpec& a) {
  if (a.charge_z != 1) {
    throw Error(ErrorKind::unsupported, "only Z = 1 is implemented (a0 -> a0/Z is not applied)");
  }
  if (a.n < 1) throw Error(ErrorKind::invalid_argument, "principal quantum number must be >= 1");
  if (!(a.radius_pm >= 0.0)) throw Error(ErrorKind::invalid_argument, "radius must be >= 0");
  if (!(a.mass_eV > 0.0)) throw Error(ErrorKind::invalid_argument, "mass must be positive");
}

// Bohr radius in light-time units for the atom's effective mass: hbar / (alpha m c).
double a0_as(const AtomSpec& a, const PhysicalConstants& k) {
  return k.hbar_eV_as / (k.alpha * a.effective_mass(k));
}

// Atom radius in light-time units, measured against the tabulated Bohr
// radius so that hydrogen sits at exactly one a0.
double radius_as(const AtomSpec& a, const PhysicalConstants& k) {
  return a.radius_pm / k.a0_pm * a0_as(a, k);
}

}  // namespace

double AtomSpec::effective_mass(const PhysicalConstants& k) const {
  return reduced_mass ? mass_eV * k.m_p / (mass_eV + k.m_p) : mass_eV;
}

AtomSpec hydrogen(int n, const PhysicalConstants& k) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "principal quantum number must be >= 1");
  return {"hydrogen", static_cast<double>(n) * n * k.a0_pm, n, k.m_e, 1, false};
}

AtomSpec cesium(const PhysicalConstants& k) { return {"cesium", 265.0, 6, k.m_e, 1, false}; }

AtomSpec atom_by_name(std::string_view name, int n, const PhysicalConstants& k) {
  if (name == "hydrogen") return hydrogen(n, k);
  if (name == "cesium") {
    if (n != 6 && n != 1) {
      throw Error(ErrorKind::unsupported, "cesium is tabulated for its valence shell only");
    }
    return cesium(k);
  }
  throw Error(ErrorKind::invalid_argument, "unknown atom: " + std::string(name));
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::entropic: return "entropic";
    case Method::gho: return "gho";
    case Method::lho: return "lho";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::naive, Method::entropic, Method::gho, Method::lho}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::invalid_argument, "unknown method: " + std::string(name));
}

DispersionEstimate DispersionEstimate::from_sigma2(Method m, double sigma_t2,
                                                   const PhysicalConstants& k) {
  DispersionEstimate e;
  e.method = m;
  e.sigma_t2 = sigma_t2;
  e.delta_t = std::sqrt(0.5 * sigma_t2);
  e.delta_E = e.delta_t > 0.0 ? heisenberg_time(e.delta_t, k) : std::numeric_limits<double>::infinity();
  return e;
}

DispersionEstimate DispersionEstimate::from_delta_t(Method m, double delta_t,
                                                    const PhysicalConstants& k) {
  return from_sigma2(m, 2.0 * delta_t * delta_t, k);
}

double DispersionEstimate::sigma_t() const { return std::sqrt(sigma_t2); }

DispersionEstimate naive_estimate(const AtomSpec& a, const PhysicalConstants& k) {
  check(a);
  return DispersionEstimate::from_delta_t(Method::naive, a.radius_pm / k.c_pm_per_as, k);
}

MomentumMoments hydrogen_momentum_moments() {
  // |psi|^2 p^2 dp; psi is normalized against the radial measure.
  auto weight = [](double p, int power) {
    const double d = 1.0 + p * p;
    return 32.0 / std::numbers::pi * std::pow(p, 2 + power) / (d * d * d * d);
  };
  constexpr double inf = std::numeric_limits<double>::infinity();
  MomentumMoments mm;
  mm.norm = quad::integrate([&](double p) { return weight(p, 0); }, 0.0, inf, 1e-12).value;
  mm.p2 = quad::integrate([&](double p) { return weight(p, 2); }, 0.0, inf, 1e-12).value / mm.norm;
  // p^6 / (1+p^2)^4 decays as 1/p^2; split to keep the tail mapping tame.
  auto w4 = [&](double p) { return weight(p, 4); };
  mm.p4 = (quad::integrate(w4, 0.0, 1.0, 1e-12).value + quad::integrate(w4, 1.0, inf, 1e-12).value) /
          mm.norm;
  return mm;
}

double entropic_delta_E(const MomentumMoments& mm, const AtomSpec& a, const PhysicalConstants& k) {
  const double var = mm.p4 - mm.p2 * mm.p2;
  if (var < 0.0) throw Error(ErrorKind::negative_variance, "<p^4> < <p^2>^2");
  const double m = a.effective_mass(k);
  const double p_unit = k.alpha * m;  // 1/a0 in eV
  return p_unit * p_unit * std::sqrt(var) / (2.0 * m);
}

DispersionEstimate entropic_estimate(const AtomSpec& a, const PhysicalConstants& k) {
  check(a);
  const double m = a.effective_mass(k);
  double dE = 0.0;
  bool approximate = false;
  if (a.label == "hydrogen" && a.n == 1) {
    dE = entropic_delta_E(hydrogen_momentum_moments(), a, k);
  } else {
    // Momenta scale as 1/r, energies as 1/r^2.
    const double s = k.a0_pm / a.radius_pm;
    dE = k.alpha * k.alpha * m * s * s;
    approximate = true;
  }
  auto e = DispersionEstimate::from_delta_t(Method::entropic, heisenberg_time(dE, k), k);
  e.delta_E = dE;
  e.approximate = approximate;
  return e;
}

double gho_omega(const AtomSpec& a, const PhysicalConstants& k) {
  return k.alpha * k.alpha * a.effective_mass(k);
}

DispersionEstimate gho_estimate(const AtomSpec& a, const PhysicalConstants& k) {
  check(a);
  const double m = a.effective_mass(k);
  // 1 / (m Omega) in eV^-2, times hbar^2 for as^2.
  const double s2 = k.hbar_eV_as * k.hbar_eV_as / (m * gho_omega(a, k));
  auto e = DispersionEstimate::from_sigma2(Method::gho, s2, k);
  e.approximate = a.label != "hydrogen" || a.n != 1;
  return e;
}

double lho_sigma(double r_as, double mu, const AtomSpec& a, const PhysicalConstants& k) {
  if (!(r_as > 0.0)) throw Error(ErrorKind::invalid_argument, "lho_sigma: r must be positive");
  if (!(mu > 0.0)) throw Error(ErrorKind::invalid_argument, "lho_sigma: mu must be positive");
  check(a);
  return std::sqrt(a0_as(a, k) * r_as * r_as * r_as / mu);
}

DispersionEstimate lho_estimate(const AtomSpec& a, double mu, const PhysicalConstants& k) {
  check(a);
  if (!(a.radius_pm > 0.0)) throw Error(ErrorKind::invalid_argument, "lho: radius must be positive");
  return DispersionEstimate::from_sigma2(Method::lho, lho_sigma(radius_as(a, k), mu, a, k), k);
}

DispersionEstimate rydberg_scaling(int n, const DispersionEstimate& base, const PhysicalConstants& k) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "rydberg_scaling: n must be >= 1");
  const double n3 = static_cast<double>(n) * n * n;
  auto e = DispersionEstimate::from_sigma2(base.method, base.sigma_t2 * n3, k);
  e.approximate = base.approximate;
  return e;
}

double lho_wavefunction(double t_as, double r_as, double mu, const AtomSpec& a,
                        const PhysicalConstants& k) {
  const double s2 = lho_sigma(r_as, mu, a, k);
  return std::pow(std::numbers::pi * s2, -0.25) * std::exp(-0.5 * t_as * t_as / s2);
}

DispersionEstimate estimate(const AtomSpec& a, Method m, double mu, const PhysicalConstants& k) {
  switch (m) {
    case Method::naive: return naive_estimate(a, k);
    case Method::entropic: return entropic_estimate(a, k);
    case Method::gho: return gho_estimate(a, k);
    case Method::lho: return lho_estimate(a, mu, k);
  }
  throw Error(ErrorKind::invalid_argument, "unknown method");
}

CesiumReport cesium_report(const PhysicalConstants& k) {
  const AtomSpec cs = cesium(k);
  const double bohr = naive_estimate(hydrogen(1, k), k).delta_t;
  CesiumReport r;
  r.candidates.push_back({"symmetric", naive_estimate(cs, k).delta_t, "r / c at 265 pm"});
  r.candidates.push_back(
      {"r^(3/4)", bohr * std::pow(cs.radius_pm / k.a0_pm, 0.75), "Bohr time * (r / a0)^(3/4)"});
  r.candidates.push_back(
      {"n^(3/2)", bohr * std::pow(static_cast<double>(cs.n), 1.5), "Bohr time * n^(3/2), n = 6"});
  return r;
}

}  // namespace tqm::bound
