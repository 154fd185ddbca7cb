#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tqm::scatter {

enum class Event { absorb, emit, relax, resonant };

std::string_view to_string(Event e);

/// Phenomenological relaxation toward a stable dispersion.
struct RelaxationPolicy {
  enum class Mode { instant, exponential };

  double target_sigma2 = 0.0;  // as^2
  Mode mode = Mode::instant;
  double rate = 0.0;           // 1/as, exponential mode only

  static RelaxationPolicy instant(double target);
  static RelaxationPolicy exponential(double target, double rate);
};

struct Entry {
  Event event = Event::absorb;
  double sigma2_in = 0.0;                  // as^2
  double sigma2_out = 0.0;                 // as^2
  std::optional<double> photon_sigma2;     // absorbed or emitted photon, as^2
  std::optional<double> photon_out_sigma2; // resonant: outgoing photon
  std::optional<RelaxationPolicy> policy;  // relax / resonant
  double elapsed = 0.0;                    // relax: elapsed time; resonant: dwell (as)
};

/// Value-type history of a particle's time dispersion.
class DispersionLedger {
 public:
  explicit DispersionLedger(double initial_sigma2);

  double initial() const { return initial_; }
  double current() const { return current_; }
  const std::vector<Entry>& entries() const { return entries_; }

  DispersionLedger absorb(double photon_sigma2) const;
  /// Throws Error(negative_variance) when photon_sigma2 > current.
  DispersionLedger emit(double photon_sigma2) const;
  DispersionLedger relax(const RelaxationPolicy& policy, double elapsed) const;
  /// Absorb, relax over the dwell, emit; recorded as one entry.
  DispersionLedger resonant(double sigma_gamma_in2, double sigma_gamma_out2, double dwell,
                            const RelaxationPolicy& policy) const;

  /// Re-applies every entry from initial().
  DispersionLedger replay() const;

 private:
  DispersionLedger apply(const Entry& e) const;

  double initial_ = 0.0;
  double current_ = 0.0;
  std::vector<Entry> entries_;
};

/// Instant or exponential approach to the target after `elapsed`.
double relax_value(double current, const RelaxationPolicy& policy, double elapsed);

/// Parses "absorb:0.5,relax:instant:1.0,emit:0.3" style chains and applies
/// them in order. Steps:
///   absorb:<s2>  emit:<s2>
///   relax:instant[:<target>]  relax:exp:<rate>:<elapsed>[:<target>]
///   resonant:<in s2>:<out s2>  resonant:<in s2>:<out s2>:<dwell>:<rate>[:<target>]
/// Relaxation targets default to default_target, or the initial dispersion.
DispersionLedger run_chain(double initial_sigma2, std::string_view chain,
                           std::optional<double> default_target = std::nullopt);

}  // namespace tqm::scatter
