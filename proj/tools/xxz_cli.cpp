// xxz_cli: sweeps, extremum/threshold location, spectra and self-verification
// for the periodic XXZ ring.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xxz/spectrum.hpp"
#include "xxz/sweep.hpp"
#include "xxz/verify.hpp"

namespace {

using xxz::SweepConfig;

struct Flags {
  int n = 5;
  double j = 1.0;
  double delta_min = 0.0;
  double delta_max = 6.0;
  double delta_step = 0.05;
  std::vector<double> deltas;
  std::vector<double> temps;
  std::string engine = "closed-form";
  std::string out;
  std::string config;
  int bond = 0;
  double tol = xxz::kLocateTol;
  double t = 0.0;
  std::string measure = "concurrence";
  std::string sense = "max";
  double scan_step = xxz::kScanStep;
  double delta = 1.0;
  std::string path = "sectors";
  int max_sites = 8;
  std::string inject_fault;
};

// Config-file values for options that are not part of SweepConfig.
struct ConfigExtras {
  std::optional<double> tol;
  std::optional<double> t;
  std::optional<std::string> measure;
  std::optional<std::string> sense;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Keys mirror the long flag names with '-' or '_'.
void apply_config_value(SweepConfig& cfg, ConfigExtras& f, std::string key, const nlohmann::json& v) {
  for (char& c : key)
    if (c == '-') c = '_';
  auto num = [&] { return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>(); };
  auto list = [&] {
    if (v.is_array()) return v.get<std::vector<double>>();
    if (v.is_string()) return parse_list(v.get<std::string>());
    return std::vector<double>{v.get<double>()};
  };
  auto str = [&] { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (key == "n") cfg.n_sites = static_cast<int>(num());
  else if (key == "j") cfg.exchange = num();
  else if (key == "delta_min") cfg.delta_min = num();
  else if (key == "delta_max") cfg.delta_max = num();
  else if (key == "delta_step") cfg.delta_step = num();
  else if (key == "deltas") cfg.deltas = list();
  else if (key == "temps") cfg.temperatures = list();
  else if (key == "engine") cfg.engine = xxz::parse_engine(str());
  else if (key == "out") cfg.output = str();
  else if (key == "bond") cfg.bond = static_cast<int>(num());
  else if (key == "tol") f.tol = num();
  else if (key == "t") f.t = num();
  else if (key == "measure") f.measure = str();
  else if (key == "sense") f.sense = str();
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

/// JSON object, or plain text with one `key = value` per line ('#' comments).
void load_config(const std::string& path, SweepConfig& cfg, ConfigExtras& f) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (trim(text).starts_with("{")) {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& [key, value] : j.items()) apply_config_value(cfg, f, key, value);
    return;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
    apply_config_value(cfg, f, trim(line.substr(0, eq)), nlohmann::json(trim(line.substr(eq + 1))));
  }
}

// defaults < config file < explicit flags
SweepConfig resolve(CLI::App& sub, Flags& f, double default_lo = 0.0, double default_hi = 6.0) {
  SweepConfig cfg;
  cfg.delta_min = default_lo;
  cfg.delta_max = default_hi;
  ConfigExtras extras;
  if (!f.config.empty()) load_config(f.config, cfg, extras);
  auto given = [&](const char* name) { return sub.get_option_no_throw(name) && sub.count(name) > 0; };
  if (extras.tol && !given("--tol")) f.tol = *extras.tol;
  if (extras.t && !given("--t")) f.t = *extras.t;
  if (extras.measure && !given("--measure")) f.measure = *extras.measure;
  if (extras.sense && !given("--sense")) f.sense = *extras.sense;
  if (given("--n")) cfg.n_sites = f.n;
  if (given("--j")) cfg.exchange = f.j;
  if (given("--delta-min")) cfg.delta_min = f.delta_min;
  if (given("--delta-max")) cfg.delta_max = f.delta_max;
  if (given("--delta-step")) cfg.delta_step = f.delta_step;
  if (given("--deltas")) cfg.deltas = f.deltas;
  if (given("--temps")) cfg.temperatures = f.temps;
  if (given("--engine")) cfg.engine = xxz::parse_engine(f.engine);
  if (given("--out")) cfg.output = f.out;
  if (given("--bond")) cfg.bond = f.bond;
  return cfg;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "Ring length N");
  sub->add_option("--j", f.j, "Exchange constant J");
  sub->add_option("--engine", f.engine, "closed-form | numeric | oracle");
  sub->add_option("--config", f.config, "JSON or key=value config file (flags override)");
  sub->add_option("--out", f.out, "Output path (default stdout)");
}

void add_delta_range(CLI::App* sub, Flags& f) {
  sub->add_option("--delta-min", f.delta_min, "Lower end of the Delta range");
  sub->add_option("--delta-max", f.delta_max, "Upper end of the Delta range");
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write(out);
}

int cmd_sweep(CLI::App& sub, Flags& f) {
  const SweepConfig cfg = resolve(sub, f);
  const auto rows = xxz::run_sweep(cfg);
  emit(cfg.output, [&](std::ostream& os) { xxz::write_csv(os, rows); });
  return 0;
}

int cmd_extremum(CLI::App& sub, Flags& f) {
  const SweepConfig cfg = resolve(sub, f, 0.5, 6.0);
  const double lo = cfg.delta_min;
  const double hi = cfg.delta_max;
  const auto measure = xxz::parse_measure(f.measure);
  const auto sense = xxz::parse_sense(f.sense);
  const auto res = xxz::find_extremum(
      xxz::measure_function(cfg.n_sites, cfg.exchange, f.t, measure, cfg.engine), lo, hi, sense,
      f.scan_step, f.tol);
  emit(cfg.output, [&](std::ostream& os) {
    os << "n=" << cfg.n_sites << " t=" << xxz::format_real(f.t) << " measure=" << f.measure
       << " sense=" << f.sense << " engine=" << xxz::to_string(cfg.engine) << '\n'
       << "delta_star=" << xxz::format_real(res.location) << '\n'
       << "value=" << xxz::format_real(res.value) << '\n'
       << "scan_delta=" << xxz::format_real(res.scan_location)
       << " scan_value=" << xxz::format_real(res.scan_value) << '\n'
       << "bracket=[" << xxz::format_real(res.bracket_lo) << ", " << xxz::format_real(res.bracket_hi)
       << "]\n"
       << "at_boundary=" << (res.at_boundary ? "true" : "false") << '\n';
  });
  return 0;
}

int cmd_threshold(CLI::App& sub, Flags& f) {
  const SweepConfig cfg = resolve(sub, f, 0.0, 8.0);
  const double lo = cfg.delta_min;
  const double hi = cfg.delta_max;
  const auto res = xxz::find_threshold(
      xxz::measure_function(cfg.n_sites, cfg.exchange, f.t, xxz::Measure::concurrence, cfg.engine),
      lo, hi, f.scan_step, f.tol);
  emit(cfg.output, [&](std::ostream& os) {
    os << "n=" << cfg.n_sites << " t=" << xxz::format_real(f.t) << " interval=["
       << xxz::format_real(lo) << ", " << xxz::format_real(hi) << "]\n";
    if (res.threshold)
      os << "delta_th=" << xxz::format_real(*res.threshold) << '\n';
    else
      os << "no_threshold: " << res.reason << '\n';
  });
  return 0;
}

int cmd_spectrum(CLI::App& sub, Flags& f) {
  const SweepConfig cfg = resolve(sub, f);
  xxz::Spectrum s;
  switch (cfg.engine) {
    case xxz::Engine::closed_form:
      if (cfg.n_sites != 5) throw std::invalid_argument("closed-form spectrum exists for N = 5 only");
      s = xxz::spectrum_closed_n5(f.delta, cfg.exchange);
      break;
    case xxz::Engine::numeric:
      s = xxz::spectrum_numeric({cfg.n_sites, cfg.exchange, f.delta},
                                f.path == "full" ? xxz::NumericPath::full : xxz::NumericPath::sectors);
      break;
    case xxz::Engine::oracle:
      s = xxz::spectrum_numeric({cfg.n_sites, cfg.exchange, f.delta}, xxz::NumericPath::full);
      break;
  }
  emit(cfg.output, [&](std::ostream& os) {
    os << "energy,slope,multiplicity,r,k\n";
    for (const auto& l : s.levels) {
      os << xxz::format_real(l.energy) << ',' << (l.slope ? xxz::format_real(*l.slope) : "") << ','
         << l.multiplicity << ',' << (l.sector ? std::to_string(l.sector->reversed) : "") << ','
         << (l.sector ? std::to_string(l.sector->k) : "") << '\n';
    }
  });
  return 0;
}

int cmd_verify(Flags& f) {
  xxz::VerifyOptions opts;
  opts.max_sites = f.max_sites;
  if (!f.inject_fault.empty()) {
    if (f.inject_fault != "delta-sign") throw std::invalid_argument("unknown fault '" + f.inject_fault + "'");
    opts.inject_delta_sign_fault = true;
  }
  const auto report = xxz::run_verification(opts);
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "[%s] %-48s max_error=%.3e tol=%.1e %s\n", c.passed ? "PASS" : "FAIL",
                 c.name.c_str(), c.max_error, c.tolerance, c.detail.c_str());
  }
  emit(f.out, [&](std::ostream& os) { os << xxz::report_json(report) << '\n'; });
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact thermal entanglement of the periodic XXZ ring"};
  app.require_subcommand(1);
  Flags f;

  auto* sweep = app.add_subcommand("sweep", "Tabulate lnZ, U, Gzz, concurrence and linear entropy to CSV");
  add_common(sweep, f);
  add_delta_range(sweep, f);
  sweep->add_option("--delta-step", f.delta_step, "Delta grid spacing");
  sweep->add_option("--deltas", f.deltas, "Explicit Delta list (overrides the range)")->delimiter(',');
  sweep->add_option("--temps", f.temps, "Temperatures, comma separated; 0 = ground state")->delimiter(',');
  sweep->add_option("--bond", f.bond, "Oracle pair (bond, bond+1)");

  auto* extremum = app.add_subcommand("extremum", "Locate the Delta extremum of a measure");
  add_common(extremum, f);
  add_delta_range(extremum, f);
  extremum->add_option("--t", f.t, "Temperature (0 = ground state)");
  extremum->add_option("--measure", f.measure, "concurrence | linear_entropy");
  extremum->add_option("--sense", f.sense, "max | min");
  extremum->add_option("--tol", f.tol, "Location tolerance");
  extremum->add_option("--scan-step", f.scan_step, "Pre-scan grid spacing");

  auto* threshold = app.add_subcommand("threshold", "Smallest Delta with nonzero concurrence");
  add_common(threshold, f);
  add_delta_range(threshold, f);
  threshold->add_option("--t", f.t, "Temperature");
  threshold->add_option("--tol", f.tol, "Bisection tolerance");
  threshold->add_option("--scan-step", f.scan_step, "Pre-scan grid spacing");

  auto* spectrum = app.add_subcommand("spectrum", "Dump eigenvalues as CSV");
  add_common(spectrum, f);
  spectrum->add_option("--delta", f.delta, "Anisotropy");
  spectrum->add_option("--path", f.path, "numeric engine: sectors | full");

  auto* verify = app.add_subcommand("verify", "Run the invariant checks; JSON summary on stdout");
  verify->add_option("--out", f.out, "Write the JSON summary here instead of stdout");
  verify->add_option("--max-sites", f.max_sites, "Largest ring for generic checks (<= 10)");
  verify->add_option("--inject-fault", f.inject_fault, "Negative control: delta-sign")->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) return cmd_sweep(*sweep, f);
    if (*extremum) return cmd_extremum(*extremum, f);
    if (*threshold) return cmd_threshold(*threshold, f);
    if (*spectrum) return cmd_spectrum(*spectrum, f);
    if (*verify) return cmd_verify(f);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
