#include "tqm/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tqm/bound.hpp"
#include "tqm/constants.hpp"
#include "tqm/error.hpp"
#include "tqm/freeprop.hpp"
#include "tqm/numgrid.hpp"
#include "tqm/parallel.hpp"
#include "tqm/photon.hpp"
#include "tqm/scatter.hpp"
#include "tqm/validate.hpp"

namespace tqm::cli {

namespace {

using ojson = nlohmann::ordered_json;

// JSON config files: top-level keys are shared flags, nested objects are
// subcommand sections, e.g. {"format": "csv", "estimate": {"atom": "cesium"}}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConfigError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void flatten(const nlohmann::json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_object()) {
        auto p = parents;
        p.push_back(key);
        flatten(v, p, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (v.is_array()) {
        for (const auto& e : v) item.inputs.push_back(scalar(e));
      } else {
        item.inputs.push_back(scalar(v));
      }
      items.push_back(std::move(item));
    }
  }
};

struct Common {
  std::string format;
  std::string output;
  std::int64_t seed = 0;
};

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string fixed(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

ojson base_config(const std::string& sub, const Common& c, const std::string& format) {
  return ojson{{"subcommand", sub}, {"format", format}, {"seed", c.seed}};
}

void echo_header(std::ostream& os, const ojson& config) {
  os << "# tqm-disp " << config["subcommand"].get<std::string>() << "\n";
  os << "# config: " << config.dump() << "\n";
}

void emit_json(std::ostream& os, ojson body, const ojson& config) {
  ojson j;
  j["config"] = config;
  for (auto& [k, v] : body.items()) j[k] = v;
  os << j.dump(2) << "\n";
}

// ---- constants -----------------------------------------------------------

void cmd_constants(std::ostream& os, const Common& c, const std::string& fmt) {
  const ojson config = base_config("constants", c, fmt);
  const auto rows = constant_table();
  if (fmt == "json") {
    ojson body;
    for (const auto& r : rows) body["constants"][r.name] = {{"value", r.value}, {"unit", r.unit}};
    emit_json(os, body, config);
    return;
  }
  echo_header(os, config);
  if (fmt == "csv") {
    os << "name,value,unit\n";
    for (const auto& r : rows) os << r.name << "," << sci(r.value) << "," << r.unit << "\n";
    return;
  }
  for (const auto& r : rows) {
    os << std::left << std::setw(20) << r.name << fixed(r.value) << " " << r.unit << "\n";
  }
}

// ---- estimate ------------------------------------------------------------

struct EstimateArgs {
  std::string atom = "hydrogen";
  std::string method = "naive";
  int n = 1;
  double mu = 1.0;
  bool reduced_mass = false;
};

ojson estimate_record(const bound::DispersionEstimate& e) {
  return {{"method", std::string(bound::to_string(e.method))},
          {"sigma_t2_as2", e.sigma_t2},
          {"delta_t_as", e.delta_t},
          {"delta_E_eV", e.delta_E},
          {"approximate", e.approximate}};
}

void cmd_estimate(std::ostream& os, const Common& c, const std::string& fmt, const EstimateArgs& a) {
  ojson config = base_config("estimate", c, fmt);
  config["atom"] = a.atom;
  config["method"] = a.method;
  config["n"] = a.n;
  config["mu"] = a.mu;
  config["reduced_mass"] = a.reduced_mass;

  const auto& k = constants();
  auto atom = bound::atom_by_name(a.atom, a.n, k);
  atom.reduced_mass = a.reduced_mass;
  const auto method = bound::parse_method(a.method);
  const auto est = bound::estimate(atom, method, a.mu, k);

  ojson body;
  body["atom"] = atom.label;
  body["n"] = atom.n;
  body["radius_pm"] = atom.radius_pm;
  const ojson record = estimate_record(est);
  for (auto& [key, v] : record.items()) body[key] = v;
  if (atom.label == "hydrogen" && atom.n > 1) {
    auto base_atom = bound::hydrogen(1, k);
    base_atom.reduced_mass = a.reduced_mass;
    body["rydberg_delta_t_as"] =
        bound::rydberg_scaling(atom.n, bound::estimate(base_atom, method, a.mu, k), k).delta_t;
  }
  std::optional<bound::CesiumReport> cs;
  if (atom.label == "cesium") {
    cs = bound::cesium_report(k);
    ojson rep;
    rep["claimed_symmetric_as"] = cs->claimed_naive_as;
    rep["claimed_scaled_as"] = cs->claimed_scaled_as;
    for (const auto& cand : cs->candidates) {
      rep["candidates"].push_back(
          {{"name", cand.name}, {"delta_t_as", cand.delta_t_as}, {"basis", cand.basis}});
    }
    body["cesium_report"] = rep;
  }
  body["units"] = {{"radius_pm", "pm"}, {"sigma_t2_as2", "as^2"}, {"delta_t_as", "as"},
                   {"delta_E_eV", "eV"}};
  if (body.contains("rydberg_delta_t_as")) body["units"]["rydberg_delta_t_as"] = "as";

  if (fmt == "json") {
    emit_json(os, body, config);
    return;
  }
  echo_header(os, config);
  if (fmt == "csv") {
    os << "quantity,value,unit\n";
    os << "sigma_t2," << sci(est.sigma_t2) << ",as^2\n";
    os << "delta_t," << sci(est.delta_t) << ",as\n";
    os << "delta_E," << sci(est.delta_E) << ",eV\n";
    if (body.contains("rydberg_delta_t_as")) {
      os << "rydberg_delta_t," << sci(body["rydberg_delta_t_as"].get<double>()) << ",as\n";
    }
    if (cs) {
      os << "claimed_symmetric," << sci(cs->claimed_naive_as) << ",as\n";
      os << "claimed_scaled," << sci(cs->claimed_scaled_as) << ",as\n";
      for (const auto& cand : cs->candidates) {
        os << "candidate_" << cand.name << "," << sci(cand.delta_t_as) << ",as\n";
      }
    }
    return;
  }
  os << atom.label << " n=" << atom.n << " method=" << a.method
     << (est.approximate ? " (approximate)" : "") << "\n";
  os << "  sigma_t^2  " << fixed(est.sigma_t2, 6) << " as^2\n";
  os << "  delta_t    " << fixed(est.delta_t, 6) << " as\n";
  os << "  delta_E    " << fixed(est.delta_E, 6) << " eV\n";
  if (body.contains("rydberg_delta_t_as")) {
    os << "  n^(3/2) scaled delta_t  " << fixed(body["rydberg_delta_t_as"].get<double>(), 6)
       << " as\n";
  }
  if (cs) {
    os << "cesium valence dispersion (unresolved)\n";
    os << "  published, symmetric estimate  " << fixed(cs->claimed_naive_as, 3) << " as\n";
    os << "  published, scaled estimate     " << fixed(cs->claimed_scaled_as, 3) << " as\n";
    for (const auto& cand : cs->candidates) {
      os << "  candidate " << std::left << std::setw(10) << cand.name << " "
         << fixed(cand.delta_t_as, 3) << " as  (" << cand.basis << ")\n";
    }
  }
}

// ---- propagate -----------------------------------------------------------

struct PropagateArgs {
  double m = 510998.95;  // eV
  double sigma_t = 1.0;  // as
  double E0 = 0.0;       // eV
  double tau = 1.0;      // as
  double t0 = 0.0;       // as
  std::size_t points = 201;
  std::size_t slices = 0;
};

void cmd_propagate(std::ostream& os, const Common& c, const std::string& fmt,
                   const PropagateArgs& a) {
  ojson config = base_config("propagate", c, fmt);
  config["m_eV"] = a.m;
  config["sigma_t_as"] = a.sigma_t;
  config["E0_eV"] = a.E0;
  config["tau_as"] = a.tau;
  config["t0_as"] = a.t0;
  config["points"] = a.points;
  config["slices"] = a.slices;

  if (a.points < 2) throw Error(ErrorKind::invalid_argument, "--points must be >= 2");
  const double hbar = constants().hbar_eV_as;
  // Energies enter the phases as E / hbar, in 1/as.
  const double m = a.m / hbar;
  const auto packet = GaussianPacket::make(Domain::time, a.t0, a.E0 / hbar, a.sigma_t);
  const auto ev = evolve_gtf(packet, m, a.tau);
  const double spread = ev.spread_sigma2();
  const double half = 6.0 * std::sqrt(spread);

  ojson evolved = {{"mean_as", ev.mean()},
                   {"drift_as", ev.drift},
                   {"spread_sigma2_as2", spread},
                   {"f_tau_re", ev.f_tau.real()},
                   {"f_tau_im", ev.f_tau.imag()}};
  if (a.slices > 0) {
    const auto spec = grid_for(packet, m, a.tau);
    const auto grid = propagate(sample_packet(packet, spec), m, a.tau, a.slices);
    evolved["grid_points"] = spec.n;
    evolved["grid_max_density_error_per_as"] = max_density_error(grid, ev);
    evolved["grid_aliased"] = grid.aliased();
  }

  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 0; i < a.points; ++i) {
    const double t = ev.mean() - half + 2.0 * half * static_cast<double>(i) / (a.points - 1);
    rows.emplace_back(t, ev.density(t));
  }

  if (fmt == "json") {
    ojson body;
    body["evolved"] = evolved;
    body["samples"] = ojson::array();
    for (auto [t, d] : rows) body["samples"].push_back({{"t_as", t}, {"density_per_as", d}});
    body["units"] = {{"f_tau", "1"}, {"density", "1/as"}};
    emit_json(os, body, config);
    return;
  }
  echo_header(os, config);
  for (auto& [key, v] : evolved.items()) {
    os << "# " << key << " = " << (v.is_number_float() ? sci(v.get<double>()) : v.dump()) << "\n";
  }
  os << (fmt == "csv" ? "t_as,density_per_as\n" : "# t_as density_per_as\n");
  for (auto [t, d] : rows) os << sci(t) << (fmt == "csv" ? "," : " ") << sci(d) << "\n";
}

// ---- photon-greens -------------------------------------------------------

struct GreensArgs {
  std::string form = "quadratic";
  double r = 1.0;
  std::optional<double> tau;
  double mu = 1.0;
  std::optional<double> width;
  std::string t_range = "-1,1,21";
};

void cmd_greens(std::ostream& os, const Common& c, const std::string& fmt, const GreensArgs& a) {
  ojson config = base_config("photon-greens", c, fmt);
  config["form"] = a.form;
  config["r_as"] = a.r;
  const double tau = a.tau.value_or(a.r);
  config["tau_as"] = tau;
  config["mu"] = a.mu;
  if (a.width) config["width_as"] = *a.width;
  config["t_range"] = a.t_range;

  std::vector<double> range;
  {
    std::stringstream ss(a.t_range);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        range.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--t-range", "expected <start,stop,n>, got " + a.t_range);
      }
    }
  }
  if (range.size() != 3 || range[2] < 2 || range[2] != std::floor(range[2])) {
    throw CLI::ValidationError("--t-range", "expected <start,stop,n> with integer n >= 2");
  }
  const auto n = static_cast<std::size_t>(range[2]);

  std::string unit;
  std::function<std::complex<double>(double)> g;
  if (a.form == "quadratic") {
    unit = "1/as";
    g = [&](double t) { return photon::quadratic_greens(t - tau, a.r, a.mu, tau).value; };
  } else if (a.form == "quadratic-fourier") {
    unit = "1/as";
    g = [&](double t) { return photon::quadratic_greens_fourier(t - tau, a.r, a.mu, tau).value; };
  } else if (a.form == "bessel") {
    unit = "1";
    const double kb = photon::kappa_bar(a.r, a.mu);
    g = [&, kb](double t) { return photon::bessel_greens(t, kb, tau); };
  } else {
    // Shell: the regularized retarded propagator as a function of clock time t.
    unit = "1/as^2";
    g = [&](double t) { return std::complex<double>(photon::retarded_shell(a.r, t, a.width)); };
  }

  std::vector<std::pair<double, std::complex<double>>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = range[0] + (range[1] - range[0]) * static_cast<double>(i) / (n - 1);
    rows.emplace_back(t, g(t));
  }

  if (fmt == "json") {
    ojson body;
    body["rows"] = ojson::array();
    for (auto [t, v] : rows) {
      body["rows"].push_back({{"t_as", t}, {"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)}});
    }
    body["units"] = {{"t_as", "as"}, {"G", unit}};
    emit_json(os, body, config);
    return;
  }
  echo_header(os, config);
  os << "# G unit: " << unit << "\n";
  const char* sep = fmt == "csv" ? "," : " ";
  os << (fmt == "csv" ? "" : "# ") << "t_as" << sep << "re_G" << sep << "im_G" << sep << "abs_G\n";
  for (auto [t, v] : rows) {
    os << sci(t) << sep << sci(v.real()) << sep << sci(v.imag()) << sep << sci(std::abs(v)) << "\n";
  }
}

// ---- scatter -------------------------------------------------------------

struct ScatterArgs {
  double init = 1.0;
  std::string chain;
  std::optional<double> lho_target_r;
  double mu = 1.0;
};

void cmd_scatter(std::ostream& os, const Common& c, const std::string& fmt, const ScatterArgs& a) {
  ojson config = base_config("scatter", c, fmt);
  config["init_as2"] = a.init;
  config["chain"] = a.chain;
  std::optional<double> target;
  if (a.lho_target_r) {
    config["lho_target_r_as"] = *a.lho_target_r;
    config["mu"] = a.mu;
    target = bound::lho_sigma(*a.lho_target_r, a.mu, bound::hydrogen(1));
    config["relax_target_as2"] = *target;
  }
  const auto ledger = scatter::run_chain(a.init, a.chain, target);

  if (fmt == "json") {
    ojson body;
    body["entries"] = ojson::array();
    std::size_t step = 1;
    for (const auto& e : ledger.entries()) {
      ojson row = {{"step", step++},
                   {"event", std::string(scatter::to_string(e.event))},
                   {"sigma2_in_as2", e.sigma2_in},
                   {"sigma2_out_as2", e.sigma2_out}};
      if (e.photon_sigma2) row["photon_sigma2_as2"] = *e.photon_sigma2;
      if (e.photon_out_sigma2) row["photon_out_sigma2_as2"] = *e.photon_out_sigma2;
      body["entries"].push_back(row);
    }
    body["current_as2"] = ledger.current();
    body["units"] = {{"sigma2", "as^2"}};
    emit_json(os, body, config);
    return;
  }
  echo_header(os, config);
  const char* sep = fmt == "csv" ? "," : " ";
  os << (fmt == "csv" ? "" : "# ") << "step" << sep << "event" << sep << "sigma2_in_as2" << sep
     << "sigma2_out_as2\n";
  std::size_t step = 0;
  os << step++ << sep << "init" << sep << sci(ledger.initial()) << sep << sci(ledger.initial())
     << "\n";
  for (const auto& e : ledger.entries()) {
    os << step++ << sep << scatter::to_string(e.event) << sep << sci(e.sigma2_in) << sep
       << sci(e.sigma2_out) << "\n";
  }
}

// ---- validate ------------------------------------------------------------

struct ValidateArgs {
  std::string suite = "all";
  std::string matrix = "default";
  double mu = 1.0;
};

bool cmd_validate(std::ostream& os, const Common& c, const std::string& fmt,
                  const ValidateArgs& a) {
  ojson config = base_config("validate", c, fmt);
  config["suite"] = a.suite;
  config["matrix"] = a.matrix;
  config["mu"] = a.mu;

  const std::size_t threads = sweep_threads();
  std::vector<validate::CaseResult> cases;
  if (a.suite == "all") cases = validate::all(threads, a.mu);
  else if (a.suite == "residues") cases = validate::residue_suite();
  else if (a.suite == "moments") cases = validate::moment_suite();
  else if (a.suite == "propagation") cases = validate::propagation_suite(threads);
  else if (a.suite == "taylor") cases = validate::taylor_suite();
  else cases = validate::mu_calibration_suite(a.mu);

  bool all_passed = true;
  for (const auto& r : cases) all_passed = all_passed && r.passed;

  if (fmt == "json") {
    ojson body;
    body["cases"] = ojson::array();
    for (const auto& r : cases) {
      body["cases"].push_back({{"suite", r.suite},
                               {"case", r.name},
                               {"max_error", r.max_error},
                               {"tolerance", r.tolerance},
                               {"passed", r.passed}});
    }
    body["passed"] = all_passed;
    body["units"] = {{"max_error", "relative; absolute 1/natural-time for propagation, "
                                   "ratio to the remainder bound for taylor"}};
    emit_json(os, body, config);
  } else {
    echo_header(os, config);
    const char* sep = fmt == "csv" ? "," : " ";
    os << (fmt == "csv" ? "" : "# ") << "suite" << sep << "case" << sep << "max_error" << sep
       << "tolerance" << sep << "passed\n";
    for (const auto& r : cases) {
      os << r.suite << sep << '"' << r.name << '"' << sep << sci(r.max_error) << sep
         << sci(r.tolerance) << sep << (r.passed ? "true" : "false") << "\n";
    }
  }
  return all_passed;
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::ordered_json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-dispersion estimates, propagation checks and photon Green's functions",
               "tqm-disp"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  const std::vector<std::string> formats{"table", "csv", "json"};
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
  app.add_option("--output", common.output, "Write the report to this file");
  app.add_option("--seed", common.seed, "Reserved; all computations are deterministic");
  app.set_config("--config", "", "JSON config file; flags override its values");

  auto* constants_cmd = app.add_subcommand("constants", "Physical constants and unit factors");

  EstimateArgs est;
  auto* estimate_cmd = app.add_subcommand("estimate", "Bound-state time dispersion");
  estimate_cmd->add_option("--atom", est.atom)->check(CLI::IsMember({"hydrogen", "cesium"}));
  estimate_cmd->add_option("--method", est.method)
      ->check(CLI::IsMember({"naive", "entropic", "gho", "lho"}));
  estimate_cmd->add_option("--n", est.n, "Principal quantum number")->check(CLI::PositiveNumber);
  estimate_cmd->add_option("--mu", est.mu, "Photon momentum calibration")->check(CLI::PositiveNumber);
  estimate_cmd->add_flag("--reduced-mass", est.reduced_mass, "Use the electron-proton reduced mass");

  PropagateArgs prop;
  auto* propagate_cmd = app.add_subcommand("propagate", "Free evolution of a time-domain packet");
  propagate_cmd->add_option("--m", prop.m, "Mass, eV")->check(CLI::PositiveNumber);
  propagate_cmd->add_option("--sigma-t", prop.sigma_t, "Initial width, as")->check(CLI::PositiveNumber);
  propagate_cmd->add_option("--E0", prop.E0, "Carrier energy, eV");
  propagate_cmd->add_option("--tau", prop.tau, "Clock time, as")->check(CLI::NonNegativeNumber);
  propagate_cmd->add_option("--t0", prop.t0, "Initial center, as");
  propagate_cmd->add_option("--points", prop.points, "Density samples");
  propagate_cmd->add_option("--slices", prop.slices, "Also run the FFT slicer with this many steps");

  GreensArgs gr;
  auto* greens_cmd = app.add_subcommand("photon-greens", "Photon Green's function tables");
  greens_cmd->add_option("--form", gr.form)
      ->check(CLI::IsMember({"quadratic", "quadratic-fourier", "bessel", "shell"}));
  greens_cmd->add_option("--r", gr.r, "Distance in light-time, as")->check(CLI::PositiveNumber);
  greens_cmd->add_option("--tau", gr.tau, "Clock time, as (default r)");
  greens_cmd->add_option("--mu", gr.mu)->check(CLI::PositiveNumber);
  greens_cmd->add_option("--width", gr.width, "Shell width, as (default r/1000)")
      ->check(CLI::PositiveNumber);
  greens_cmd->add_option("--t-range", gr.t_range, "start,stop,n in as");

  ScatterArgs sc;
  auto* scatter_cmd = app.add_subcommand("scatter", "Dispersion ledger through a chain of events");
  scatter_cmd->add_option("--init", sc.init, "Initial sigma^2, as^2")->check(CLI::NonNegativeNumber);
  scatter_cmd->add_option("--chain", sc.chain, "e.g. absorb:0.5,relax:instant,emit:0.3");
  scatter_cmd->add_option("--lho-target-r", sc.lho_target_r,
                          "Default relaxation target from the LHO sigma^2 at this r, as");
  scatter_cmd->add_option("--mu", sc.mu)->check(CLI::PositiveNumber);

  ValidateArgs val;
  auto* validate_cmd = app.add_subcommand("validate", "Run the oracle suite");
  validate_cmd->add_option("suite", val.suite)
      ->check(CLI::IsMember({"all", "residues", "moments", "propagation", "taylor", "mu"}));
  validate_cmd->add_option("--matrix", val.matrix)->check(CLI::IsMember({"default"}));
  validate_cmd->add_option("--mu", val.mu, "Override mu for the calibration case")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tqm-disp: " << e.what() << "\n";
    return 2;
  }

  auto pick = [&](const char* fallback) {
    return common.format.empty() ? std::string(fallback) : common.format;
  };

  std::ostringstream report;
  bool ok = true;
  try {
    if (constants_cmd->parsed()) cmd_constants(report, common, pick("table"));
    else if (estimate_cmd->parsed()) cmd_estimate(report, common, pick("json"), est);
    else if (propagate_cmd->parsed()) cmd_propagate(report, common, pick("csv"), prop);
    else if (greens_cmd->parsed()) cmd_greens(report, common, pick("csv"), gr);
    else if (scatter_cmd->parsed()) cmd_scatter(report, common, pick("csv"), sc);
    else if (validate_cmd->parsed()) ok = cmd_validate(report, common, pick("json"), val);
  } catch (const CLI::ParseError& e) {
    err << "tqm-disp: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    error_json(err, to_string(e.kind()), e.what());
    // Bad user-supplied values are usage errors.
    return e.kind() == ErrorKind::invalid_argument ? 2 : 1;
  } catch (const std::exception& e) {
    error_json(err, "internal", e.what());
    return 1;
  }

  if (common.output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(common.output, std::ios::binary);
    file << report.str();
    if (!file) {
      error_json(err, "io", "cannot write " + common.output);
      return 1;
    }
  }
  if (!ok) {
    error_json(err, "validation_failed", "one or more validation cases failed");
    return 1;
  }
  return 0;
}

}  // namespace tqm::cli
