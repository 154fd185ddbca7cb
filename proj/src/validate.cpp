#include "tqm/validate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tqm/bound.hpp"
#include "tqm/constants.hpp"
#include "tqm/error.hpp"
#include "tqm/numgrid.hpp"
#include "tqm/photon.hpp"

namespace tqm::validate {

namespace {

std::string label(const char* a, double x, const char* b, double y) {
  std::ostringstream s;
  s << a << "=" << x << " " << b << "=" << y;
  return s.str();
}

CaseResult relative(std::string suite, std::string name, double got, double want, double tol) {
  const double err = std::abs(got - want) / std::abs(want);
  return {std::move(suite), std::move(name), err, tol, err < tol};
}

}  // namespace

std::vector<CaseResult> residue_suite() {
  std::vector<CaseResult> out;
  for (double kappa : {0.5, 1.0, 2.0, 5.0}) {
    for (double tau : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      CaseResult c{"residues", label("kappa", kappa, "tau", tau), 0.0, 1e-6, false};
      try {
        const auto r = photon::residue_check(kappa, tau);
        c.max_error = r.abs_error / std::abs(r.analytic);
        c.passed = c.max_error < c.tolerance;
      } catch (const Error&) {
        c.max_error = std::numeric_limits<double>::infinity();
      }
      out.push_back(c);
    }
  }
  return out;
}

std::vector<CaseResult> moment_suite() {
  const auto mm = bound::hydrogen_momentum_moments();
  const auto& k = constants();
  const bound::AtomSpec h = bound::hydrogen(1, k);
  return {
      relative("moments", "norm", mm.norm, 1.0, 1e-8),
      relative("moments", "p2", mm.p2, 1.0, 1e-6),
      relative("moments", "p4", mm.p4, 5.0, 1e-6),
      relative("moments", "delta_E", bound::entropic_delta_E(mm, h, k), k.alpha * k.alpha * k.m_e,
               1e-4),
  };
}

std::vector<CaseResult> propagation_suite(std::size_t threads) {
  std::vector<CaseResult> out;
  for (const auto& r : run_matrix(default_matrix(), threads)) {
    out.push_back({"propagation", r.input.name(), r.max_error, kDensityTolerance, r.passed});
  }
  return out;
}

std::vector<CaseResult> taylor_suite() {
  std::vector<CaseResult> out;
  for (double r : {1.0, constants().a0_as(), 37.5}) {
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      const double t = 0.5 * r * i / 49.0;
      const double diff =
          std::abs(photon::pseudo_euclidean_potential(t, r) - photon::pseudo_euclidean_quadratic(t, r));
      const double bound = photon::expansion_bound(t, r);
      // Rounding in the two evaluations is a few ulp of 1/r.
      if (diff > bound + 4.0 * std::numeric_limits<double>::epsilon() / r) ok = false;
      if (bound > 0.0) worst = std::max(worst, diff / bound);
    }
    std::ostringstream name;
    name << "r=" << r;
    out.push_back({"taylor", name.str(), worst, 1.0, ok});
  }
  return out;
}

std::vector<CaseResult> mu_calibration_suite(double mu) {
  const auto& k = constants();
  const auto h = bound::hydrogen(1, k);
  const double a0 = bohr_time(k);
  const double gho = bound::gho_estimate(h, k).sigma_t2;
  std::ostringstream name;
  name << "mu=" << mu;
  return {relative("mu_calibration", name.str(), bound::lho_sigma(a0, mu, h, k), gho, 1e-12)};
}

std::vector<CaseResult> all(std::size_t threads, double mu) {
  std::vector<CaseResult> out;
  for (auto&& part : {residue_suite(), moment_suite(), propagation_suite(threads), taylor_suite(),
                      mu_calibration_suite(mu)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace tqm::validate
