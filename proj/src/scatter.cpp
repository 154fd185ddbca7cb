#include "tqm/scatter.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "tqm/error.hpp"

namespace tqm::scatter {

std::string_view to_string(Event e) {
  switch (e) {
    case Event::absorb: return "absorb";
    case Event::emit: return "emit";
    case Event::relax: return "relax";
    case Event::resonant: return "resonant";
  }
  return "?";
}

RelaxationPolicy RelaxationPolicy::instant(double target) {
  if (!(target >= 0.0)) throw Error(ErrorKind::invalid_argument, "relaxation target must be >= 0");
  return {target, Mode::instant, 0.0};
}

RelaxationPolicy RelaxationPolicy::exponential(double target, double rate) {
  if (!(target >= 0.0)) throw Error(ErrorKind::invalid_argument, "relaxation target must be >= 0");
  if (!(rate > 0.0)) throw Error(ErrorKind::invalid_argument, "relaxation rate must be > 0");
  return {target, Mode::exponential, rate};
}

double relax_value(double current, const RelaxationPolicy& policy, double elapsed) {
  if (!(elapsed >= 0.0)) throw Error(ErrorKind::invalid_argument, "elapsed time must be >= 0");
  if (policy.mode == RelaxationPolicy::Mode::instant) return policy.target_sigma2;
  if (!(policy.rate > 0.0)) throw Error(ErrorKind::invalid_argument, "relaxation rate must be > 0");
  return policy.target_sigma2 + (current - policy.target_sigma2) * std::exp(-policy.rate * elapsed);
}

DispersionLedger::DispersionLedger(double initial_sigma2)
    : initial_(initial_sigma2), current_(initial_sigma2) {
  if (!(initial_sigma2 >= 0.0)) {
    throw Error(ErrorKind::negative_variance, "initial dispersion must be >= 0");
  }
}

DispersionLedger DispersionLedger::apply(const Entry& proto) const {
  Entry e = proto;
  e.sigma2_in = current_;
  switch (e.event) {
    case Event::absorb: {
      const double g = *e.photon_sigma2;
      if (!(g >= 0.0)) throw Error(ErrorKind::invalid_argument, "photon dispersion must be >= 0");
      e.sigma2_out = current_ + g;
      break;
    }
    case Event::emit: {
      const double g = *e.photon_sigma2;
      if (!(g >= 0.0)) throw Error(ErrorKind::invalid_argument, "photon dispersion must be >= 0");
      if (g > current_) {
        std::ostringstream msg;
        msg << "emission of sigma^2 = " << g << " as^2 from sigma^2 = " << current_
            << " as^2 leaves a negative variance";
        throw Error(ErrorKind::negative_variance, msg.str());
      }
      e.sigma2_out = current_ - g;
      break;
    }
    case Event::relax:
      e.sigma2_out = relax_value(current_, *e.policy, e.elapsed);
      break;
    case Event::resonant: {
      const DispersionLedger mid =
          DispersionLedger(current_).absorb(*e.photon_sigma2).relax(*e.policy, e.elapsed);
      e.sigma2_out = mid.emit(*e.photon_out_sigma2).current();
      break;
    }
  }
  DispersionLedger next = *this;
  next.current_ = e.sigma2_out;
  next.entries_.push_back(e);
  return next;
}

DispersionLedger DispersionLedger::absorb(double photon_sigma2) const {
  Entry e;
  e.event = Event::absorb;
  e.photon_sigma2 = photon_sigma2;
  return apply(e);
}

DispersionLedger DispersionLedger::emit(double photon_sigma2) const {
  Entry e;
  e.event = Event::emit;
  e.photon_sigma2 = photon_sigma2;
  return apply(e);
}

DispersionLedger DispersionLedger::relax(const RelaxationPolicy& policy, double elapsed) const {
  Entry e;
  e.event = Event::relax;
  e.policy = policy;
  e.elapsed = elapsed;
  return apply(e);
}

DispersionLedger DispersionLedger::resonant(double sigma_gamma_in2, double sigma_gamma_out2,
                                            double dwell, const RelaxationPolicy& policy) const {
  Entry e;
  e.event = Event::resonant;
  e.photon_sigma2 = sigma_gamma_in2;
  e.photon_out_sigma2 = sigma_gamma_out2;
  e.policy = policy;
  e.elapsed = dwell;
  return apply(e);
}

DispersionLedger DispersionLedger::replay() const {
  DispersionLedger out(initial_);
  for (const Entry& e : entries_) out = out.apply(e);
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double number(std::string_view tok, std::string_view step) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::invalid_argument,
                "bad number '" + std::string(tok) + "' in chain step '" + std::string(step) + "'");
  }
  return v;
}

}  // namespace

DispersionLedger run_chain(double initial_sigma2, std::string_view chain,
                           std::optional<double> default_target) {
  DispersionLedger ledger(initial_sigma2);
  const double fallback = default_target.value_or(initial_sigma2);
  if (chain.empty()) return ledger;
  for (std::string_view step : split(chain, ',')) {
    const auto f = split(step, ':');
    const std::string_view op = f[0];
    auto bad = [&] {
      return Error(ErrorKind::invalid_argument, "malformed chain step '" + std::string(step) + "'");
    };
    auto arg = [&](std::size_t i) { return number(f.at(i), step); };
    if (op == "absorb" || op == "emit") {
      if (f.size() != 2) throw bad();
      ledger = op == "absorb" ? ledger.absorb(arg(1)) : ledger.emit(arg(1));
    } else if (op == "relax") {
      if (f.size() < 2) throw bad();
      if (f[1] == "instant") {
        if (f.size() > 3) throw bad();
        const double target = f.size() == 3 ? arg(2) : fallback;
        ledger = ledger.relax(RelaxationPolicy::instant(target), 0.0);
      } else if (f[1] == "exp") {
        if (f.size() < 4 || f.size() > 5) throw bad();
        const double target = f.size() == 5 ? arg(4) : fallback;
        ledger = ledger.relax(RelaxationPolicy::exponential(target, arg(2)), arg(3));
      } else {
        throw bad();
      }
    } else if (op == "resonant") {
      // resonant:<in>:<out> has no dwell; a dwell needs a relaxation rate.
      if (f.size() != 3 && f.size() != 5 && f.size() != 6) throw bad();
      const double target = f.size() == 6 ? arg(5) : fallback;
      if (f.size() == 3) {
        ledger = ledger.resonant(arg(1), arg(2), 0.0, RelaxationPolicy::exponential(target, 1.0));
      } else {
        ledger = ledger.resonant(arg(1), arg(2), arg(3),
                                 RelaxationPolicy::exponential(target, arg(4)));
      }
    } else {
      throw bad();
    }
  }
  return ledger;
}

}  // namespace tqm::scatter
