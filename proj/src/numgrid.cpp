#include "tqm/numgrid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tqm/error.hpp"
#include "tqm/parallel.hpp"

namespace tqm {

using cplx = std::complex<double>;

namespace {

// FFTW's planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place transform over a std::vector. FFTW_UNALIGNED keeps the chosen
// codelets independent of where the allocator put the buffer, so repeated
// runs are bitwise identical.
class FftPlan {
 public:
  FftPlan(std::vector<cplx>& data, int sign) {
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan_ == nullptr) {
      throw Error(ErrorKind::invalid_argument, "FFTW could not plan the transform");
    }
  }
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  void execute() { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

// Sum_j x_j exp(+i E_k (t_j - t_min)) for sign = +1 (FFTW_BACKWARD).
void transform(std::vector<cplx>& data, int sign) {
  FftPlan plan(data, sign);
  plan.execute();
}

double bin_energy(std::size_t k, std::size_t n, double dt) {
  const auto signed_k = k < n / 2 ? static_cast<double>(k)
                                  : static_cast<double>(k) - static_cast<double>(n);
  return 2.0 * std::numbers::pi * signed_k / (static_cast<double>(n) * dt);
}

void check_spec(const GridSpec& spec) {
  if (spec.n < 16 || !std::has_single_bit(spec.n)) {
    throw Error(ErrorKind::invalid_argument, "grid size must be a power of two >= 16");
  }
  if (!(spec.dt > 0.0) || !std::isfinite(spec.dt)) {
    throw Error(ErrorKind::invalid_argument, "grid step must be finite and positive");
  }
}

// Fraction of spectral power within two bins of Nyquist.
bool near_nyquist(const std::vector<cplx>& spec) {
  const std::size_t n = spec.size();
  double total = 0.0;
  double edge = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double p = std::norm(spec[k]);
    total += p;
    const std::size_t dist = k < n / 2 ? n / 2 - k : k - n / 2;
    if (dist <= 2) edge += p;
  }
  return total > 0.0 && edge / total > 1e-6;
}

}  // namespace

GridSpec GridSpec::centered(double center, double half_width, std::size_t n) {
  if (!(half_width > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "grid half width must be positive");
  }
  GridSpec s{center - half_width, 2.0 * half_width / static_cast<double>(n), n};
  check_spec(s);
  return s;
}

GridState::GridState(GridSpec spec, std::vector<cplx> samples, bool aliased)
    : spec_(spec), samples_(std::move(samples)), aliased_(aliased) {
  check_spec(spec_);
  if (samples_.size() != spec_.n) {
    throw Error(ErrorKind::invalid_argument, "sample count does not match grid size");
  }
}

double GridState::norm() const {
  double s = 0.0;
  for (const cplx& z : samples_) s += std::norm(z);
  return s * spec_.dt;
}

GridSpec grid_for(const GaussianPacket& p, double m, double tau) {
  const EvolvedPacket ev = evolve_gtf(p, m, tau);
  const double spread = std::sqrt(ev.spread_sigma2());
  const double half = 8.0 * p.sigma + 8.0 * std::abs(ev.drift) + 8.0 * spread;
  const double e0 = std::abs(p.carrier);
  double dt = std::numbers::pi / (e0 + 10.0 / p.sigma);
  if (e0 > 0.0) dt = std::min(dt, std::numbers::pi / (4.0 * e0));
  const auto n = std::max<std::size_t>(16, std::bit_ceil(static_cast<std::size_t>(
                                               std::ceil(2.0 * half / dt))));
  return GridSpec::centered(p.center, half, n);
}

namespace {

void check_coverage(const GridSpec& spec, double center, double width) {
  if (spec.t_min > center - 8.0 * width || spec.t_max() < center + 8.0 * width) {
    std::ostringstream msg;
    msg << "grid [" << spec.t_min << ", " << spec.t_max() << "] does not cover +-8 sigma ("
        << 8.0 * width << ") about " << center;
    throw Error(ErrorKind::truncation, msg.str());
  }
}

}  // namespace

GridState sample_packet(const GaussianPacket& p, const GridSpec& spec) {
  check_spec(spec);
  if (p.domain != Domain::time) {
    throw Error(ErrorKind::invalid_argument, "sample_packet expects a time-domain packet");
  }
  check_coverage(spec, p.center, p.sigma);
  std::vector<cplx> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) v[i] = p(spec.t(i));
  return {spec, std::move(v)};
}

GridState sample_packet(const EvolvedPacket& p, const GridSpec& spec) {
  check_spec(spec);
  check_coverage(spec, p.mean(), p.base.sigma * std::abs(p.f_tau));
  std::vector<cplx> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) v[i] = p(spec.t(i));
  return {spec, std::move(v)};
}

GridState step_once(const GridState& s, double m, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "slice width must be positive");
  }
  if (!(m > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "mass must be positive");
  }
  const GridSpec& spec = s.spec();
  const double resolution = m * spec.dt * spec.dt / epsilon;
  if (!std::isfinite(resolution) || resolution == 0.0) {
    throw Error(ErrorKind::invalid_argument, "kernel support not resolvable on this grid");
  }
  std::vector<cplx> work(s.samples().begin(), s.samples().end());
  transform(work, FFTW_BACKWARD);
  const bool aliased = s.aliased() || near_nyquist(work);
  const double inv_n = 1.0 / static_cast<double>(spec.n);
  for (std::size_t k = 0; k < spec.n; ++k) {
    const double e = bin_energy(k, spec.n, spec.dt);
    work[k] *= std::polar(inv_n, e * e * epsilon / (2.0 * m));
  }
  transform(work, FFTW_FORWARD);
  return {spec, std::move(work), aliased};
}

GridState propagate(const GridState& s, double m, double tau, std::size_t slices) {
  if (slices == 0) {
    throw Error(ErrorKind::invalid_argument, "propagate needs at least one slice");
  }
  GridState cur = s;
  const double eps = tau / static_cast<double>(slices);
  for (std::size_t i = 0; i < slices; ++i) cur = step_once(cur, m, eps);
  return cur;
}

GridState step_real_space(const GridState& s, double m, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "slice width must be positive");
  }
  const GridSpec& spec = s.spec();
  const auto in = s.samples();
  std::vector<cplx> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < spec.n; ++j) {
      acc += kernel_time(spec.t(i), spec.t(j), m, epsilon) * in[j];
    }
    out[i] = acc * spec.dt;
  }
  return {spec, std::move(out), s.aliased()};
}

Spectrum spectrum(const GridState& s) {
  const GridSpec& spec = s.spec();
  std::vector<cplx> work(s.samples().begin(), s.samples().end());
  transform(work, FFTW_BACKWARD);
  Spectrum out;
  out.energy.resize(spec.n);
  out.amplitude.resize(spec.n);
  const double scale = spec.dt / std::sqrt(2.0 * std::numbers::pi);
  const std::size_t half = spec.n / 2;
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::size_t k = (i + half) % spec.n;  // ascending energies
    const double e = bin_energy(k, spec.n, spec.dt);
    out.energy[i] = e;
    out.amplitude[i] = scale * std::polar(1.0, e * spec.t_min) * work[k];
  }
  return out;
}

double max_density_error(const GridState& s, const EvolvedPacket& exact) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    worst = std::max(worst, std::abs(std::norm(s.samples()[i]) - exact.density(s.t(i))));
  }
  return worst;
}

double loglog_slope(std::span<const std::pair<std::size_t, double>> points) {
  if (points.size() < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto n = static_cast<double>(points.size());
  for (const auto& [x, err] : points) {
    const double lx = std::log(static_cast<double>(x));
    const double ly = std::log(std::max(err, 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

namespace {

void check_ascending(std::span<const std::size_t> xs, const char* what) {
  if (xs.empty()) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + " list is empty");
  }
  if (!std::is_sorted(xs.begin(), xs.end()) || xs.front() == 0) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + " list must be ascending and positive");
  }
}

}  // namespace

ConvergenceReport convergence_study(const GaussianPacket& p, double m, double tau,
                                    std::span<const std::size_t> slice_counts) {
  check_ascending(slice_counts, "slice count");
  const GridSpec spec = grid_for(p, m, tau);
  const GridState start = sample_packet(p, spec);
  const EvolvedPacket exact = evolve_gtf(p, m, tau);
  ConvergenceReport r{"slices", {}, 0.0};
  for (std::size_t slices : slice_counts) {
    r.steps.emplace_back(slices, max_density_error(propagate(start, m, tau, slices), exact));
  }
  r.order_estimate = -loglog_slope(r.steps);
  return r;
}

ConvergenceReport resolution_study(const GaussianPacket& p, double m, double tau,
                                   double half_width, std::span<const std::size_t> grid_sizes) {
  check_ascending(grid_sizes, "grid size");
  const EvolvedPacket exact = evolve_gtf(p, m, tau);
  ConvergenceReport r{"grid_points", {}, 0.0};
  for (std::size_t n : grid_sizes) {
    const GridSpec spec = GridSpec::centered(p.center, half_width, n);
    r.steps.emplace_back(n, max_density_error(step_once(sample_packet(p, spec), m, tau), exact));
  }
  r.order_estimate = -loglog_slope(r.steps);
  return r;
}

void write_csv(std::ostream& os, const ConvergenceReport& r) {
  os << "# convergence in " << r.variable << ", order_estimate=" << r.order_estimate << "\n";
  os << r.variable << ",max_density_error\n";
  char buf[64];
  for (const auto& [x, err] : r.steps) {
    std::snprintf(buf, sizeof buf, "%.11e", err);
    os << x << ',' << buf << '\n';
  }
}

double suppression_scale(double tau_as, const PhysicalConstants& k) {
  if (!(tau_as > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "suppression_scale: tau must be positive");
  }
  return k.hbar_eV_as / tau_as;
}

SuppressionFactor suppression_factor(double delta_w_eV, double kappa_eV, double tau_as,
                                     const PhysicalConstants& k) {
  if (!(kappa_eV > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "suppression_factor: kappa must be positive");
  }
  const double w = kappa_eV + delta_w_eV;
  const double varpi = (w * w - kappa_eV * kappa_eV) / (2.0 * kappa_eV);
  const double phase = varpi * tau_as / k.hbar_eV_as;
  return {std::polar(1.0, -phase), phase, delta_w_eV * tau_as / k.hbar_eV_as};
}

std::string PropagationCase::name() const {
  std::ostringstream os;
  os << "sigma_t=" << sigma_t << ",tau=" << tau_factor << "*m*sigma_t^2,m=" << mass
     << ",E0=" << carrier << ",slices=" << slices;
  return os.str();
}

std::vector<PropagationCase> default_matrix() {
  std::vector<PropagationCase> cases;
  for (double s : {0.5, 1.0, 2.0}) {
    for (double f : {0.1, 1.0, 5.0}) cases.push_back({s, f, 1.0, 1.0, 8});
  }
  return cases;
}

PropagationResult run_case(const PropagationCase& c) {
  const GaussianPacket p = GaussianPacket::make(Domain::time, 0.0, c.carrier, c.sigma_t);
  const double tau = c.tau();
  const GridSpec spec = grid_for(p, c.mass, tau);
  GridState cur = sample_packet(p, spec);
  PropagationResult r{c, spec.n, 0.0, 0.0, false, false};
  const double eps = tau / static_cast<double>(c.slices);
  for (std::size_t i = 0; i < c.slices; ++i) {
    GridState next = step_once(cur, c.mass, eps);
    r.max_norm_drift = std::max(r.max_norm_drift, std::abs(next.norm() - cur.norm()));
    cur = std::move(next);
  }
  r.max_error = max_density_error(cur, evolve_gtf(p, c.mass, tau));
  r.aliased = cur.aliased();
  r.passed = !r.aliased && r.max_error < kDensityTolerance &&
             r.max_norm_drift < kNormDriftTolerance;
  return r;
}

std::vector<PropagationResult> run_matrix(const std::vector<PropagationCase>& cases,
                                          std::size_t threads) {
  return parallel_map(cases, run_case, threads);
}

}  // namespace tqm
