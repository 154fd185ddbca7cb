#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tqm/error.hpp"
#include "tqm/numgrid.hpp"

using namespace tqm;
using cplx = std::complex<double>;
using std::numbers::pi;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec::centered(0.0, 5.0, 100), Error);
  CHECK_THROWS_AS(GridSpec::centered(0.0, 5.0, 8), Error);
  CHECK_THROWS_AS(GridSpec::centered(0.0, 0.0, 64), Error);
  const auto s = GridSpec::centered(1.0, 4.0, 64);
  CHECK(s.t(0) == -3.0);
  CHECK(s.dt == 0.125);
  try {
    sample_packet(GaussianPacket::make(Domain::time, 0.0, 0.0, 1.0), GridSpec::centered(0.0, 6.0, 64));
    FAIL("expected truncation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::truncation);
  }
}

TEST_CASE("sampling") {
  const auto p = GaussianPacket::make(Domain::time, 0.0, 0.0, 1.0);
  const auto g = sample_packet(p, GridSpec::centered(0.0, 12.0, 4096));
  CHECK(g.norm() == doctest::Approx(1.0).epsilon(1e-8));

  // Moment fit recovers the parameters.
  const auto q = GaussianPacket::make(Domain::time, 0.37, 2.0, 0.6);
  const auto gq = sample_packet(q, GridSpec::centered(0.0, 8.0, 2048));
  double m0 = 0, m1 = 0, m2 = 0;
  for (std::size_t i = 0; i < gq.size(); ++i) {
    const double w = std::norm(gq.samples()[i]) * gq.spec().dt;
    m0 += w;
    m1 += w * gq.t(i);
    m2 += w * gq.t(i) * gq.t(i);
  }
  const double mean = m1 / m0;
  CHECK(mean == doctest::Approx(0.37).epsilon(1e-6));
  CHECK(std::sqrt(2.0 * (m2 / m0 - mean * mean)) == doctest::Approx(0.6).epsilon(1e-6));
}

TEST_CASE("spectrum follows the time/energy convention") {
  const auto p = GaussianPacket::make(Domain::time, 0.8, 1.5, 1.2);
  const auto sp = spectrum(sample_packet(p, GridSpec::centered(0.8, 16.0, 1024)));
  const auto q = fourier_pair(p);
  double worst = 0.0;
  for (std::size_t i = 0; i < sp.energy.size(); ++i) {
    worst = std::max(worst, std::abs(sp.amplitude[i] - q(sp.energy[i])));
  }
  CHECK(worst < 1e-10);
  for (std::size_t i = 1; i < sp.energy.size(); ++i) CHECK(sp.energy[i] > sp.energy[i - 1]);
}

TEST_CASE("free step is unitary and exact") {
  const auto p = GaussianPacket::make(Domain::time, 0.0, 1.0, 1.0);
  const double m = 1.0, tau = 1.0;
  const auto spec = grid_for(p, m, tau);
  const auto start = sample_packet(p, spec);
  auto s = start;
  for (int i = 0; i < 16; ++i) {
    const auto next = step_once(s, m, tau / 16);
    CHECK(std::abs(next.norm() - s.norm()) < 1e-12);
    s = next;
  }
  CHECK_FALSE(s.aliased());
  CHECK(max_density_error(s, evolve_gtf(p, m, tau)) < 1e-10);
  // One slice equals many.
  CHECK(max_density_error(propagate(start, m, tau, 1), evolve_gtf(p, m, tau)) < 1e-10);
}

TEST_CASE("real-space kernel convolution agrees with FFT and closed form") {
  const double m = 1.0, tau = 1.0;
  const auto p = GaussianPacket::make(Domain::time, 0.0, 0.5, 1.0);
  const auto spec = GridSpec::centered(0.0, 16.0, 1024);
  const auto start = sample_packet(p, spec);
  const auto exact = evolve_gtf(p, m, tau);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto real = start;
    for (std::size_t i = 0; i < n; ++i) real = step_real_space(real, m, tau / n);
    const auto fft = propagate(start, m, tau, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < real.size(); ++i) {
      worst = std::max(worst, std::abs(real.samples()[i] - fft.samples()[i]));
    }
    INFO("slices " << n);
    CHECK(worst < 1e-6);
    CHECK(max_density_error(real, exact) < 1e-6);
  }
}

TEST_CASE("aliasing is flagged") {
  const auto spec = GridSpec::centered(0.0, 16.0, 256);
  // Carrier at 90% of Nyquist.
  const auto p = GaussianPacket::make(Domain::time, 0.0, 0.9 * pi / spec.dt, 1.0);
  CHECK(step_once(sample_packet(p, spec), 1.0, 0.1).aliased());
  const auto calm = GaussianPacket::make(Domain::time, 0.0, 0.5, 1.0);
  CHECK_FALSE(step_once(sample_packet(calm, spec), 1.0, 0.1).aliased());
}

TEST_CASE("convergence studies") {
  const auto p = GaussianPacket::make(Domain::time, 0.0, 1.0, 1.0);
  const std::vector<std::size_t> slices{1, 2, 4, 8, 64};
  const auto r = convergence_study(p, 1.0, 1.0, slices);
  CHECK(r.variable == "slices");
  REQUIRE(r.steps.size() == slices.size());
  for (const auto& [n, err] : r.steps) {
    CHECK(err >= 0.0);
    CHECK(err < 1e-10);
  }
  CHECK(std::abs(r.steps.front().second - r.steps.back().second) < 1e-12);

  const std::vector<std::size_t> sizes{32, 64, 128, 256};
  const auto res = resolution_study(p, 1.0, 1.0, 16.0, sizes);
  for (std::size_t i = 1; i < res.steps.size(); ++i) {
    CHECK(res.steps[i].second <= std::max(res.steps[i - 1].second, 1e-12));
  }
  CHECK(res.steps.back().second < 1e-10);
  CHECK(res.steps.front().second > 1e-3);

  CHECK_THROWS_AS(convergence_study(p, 1.0, 1.0, std::vector<std::size_t>{}), Error);
  CHECK_THROWS_AS(convergence_study(p, 1.0, 1.0, std::vector<std::size_t>{4, 2}), Error);

  std::ostringstream csv;
  write_csv(csv, res);
  CHECK(csv.str().find("grid_points,max_density_error\n32,") != std::string::npos);
}

TEST_CASE("loglog slope") {
  std::vector<std::pair<std::size_t, double>> pts;
  for (std::size_t n : {2, 4, 8, 16, 32}) pts.emplace_back(n, 3.0 * std::pow(double(n), -2.0));
  CHECK(loglog_slope(pts) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("suppression scale") {
  const double e = suppression_scale(0.177);
  CHECK(e == doctest::Approx(658.2119569 / 0.177));
  CHECK(std::abs(e / 3872.0 - 1.0) < 0.05);
  CHECK(suppression_scale(0.354) == doctest::Approx(e / 2));
  CHECK(suppression_scale(658.2119569) == doctest::Approx(1.0));
  CHECK_THROWS_AS(suppression_scale(0.0), Error);
}

TEST_CASE("suppression factor") {
  CHECK(suppression_factor(0.0, 100.0, 1.0).value == cplx(1.0));
  const double kappa = 500.0, tau = 0.177;
  for (double dw : {0.5, 2.0, 9.0}) {
    const auto f = suppression_factor(dw, kappa, tau);
    CHECK(std::abs(f.value) == doctest::Approx(1.0).epsilon(1e-15));
    const double varpi = ((kappa + dw) * (kappa + dw) - kappa * kappa) / (2 * kappa);
    CHECK(f.phase == doctest::Approx(varpi * tau / 658.2119569).epsilon(1e-13));
    CHECK(f.linear_phase == doctest::Approx(f.phase).epsilon(0.01));
  }
}

TEST_CASE("pinned matrix") {
  const auto cases = default_matrix();
  CHECK(cases.size() == 9);
  for (const auto& r : run_matrix(cases, 1)) {
    INFO(r.input.name());
    CHECK(r.passed);
    CHECK(r.max_error < kDensityTolerance);
    CHECK(r.max_norm_drift < kNormDriftTolerance);
    CHECK_FALSE(r.aliased);
  }
}

TEST_CASE("sweep results do not depend on scheduling") {
  const auto cases = default_matrix();
  const auto a = run_matrix(cases, 1);
  const auto b = run_matrix(cases, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].input.name() == b[i].input.name());
    CHECK(a[i].max_error == b[i].max_error);
    CHECK(a[i].max_norm_drift == b[i].max_norm_drift);
    CHECK(a[i].grid_points == b[i].grid_points);
  }
}
