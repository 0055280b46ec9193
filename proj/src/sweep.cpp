#include "xxz/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "xxz/oracle.hpp"
#include "xxz/pairstate.hpp"
#include "xxz/spectrum.hpp"
#include "xxz/thermo.hpp"

namespace xxz {

Engine parse_engine(std::string_view name) {
  if (name == "closed-form" || name == "closed") return Engine::closed_form;
  if (name == "numeric") return Engine::numeric;
  if (name == "oracle") return Engine::oracle;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::closed_form: return "closed-form";
    case Engine::numeric: return "numeric";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  if (name == "concurrence") return Measure::concurrence;
  if (name == "linear_entropy" || name == "linear-entropy") return Measure::linear_entropy;
  throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

Sense parse_sense(std::string_view name) {
  if (name == "max") return Sense::maximize;
  if (name == "min") return Sense::minimize;
  throw std::invalid_argument("sense must be 'max' or 'min'");
}

void SweepConfig::validate() const {
  if (n_sites < 2) throw std::invalid_argument("--n must be >= 2");
  if (!(exchange > 0.0)) throw std::invalid_argument("exchange J must be > 0");
  if (deltas.empty()) {
    if (!(delta_step > 0.0)) throw std::invalid_argument("delta step must be > 0");
    if (!(delta_min >= 0.0) || !(delta_max >= delta_min))
      throw std::invalid_argument("delta range must satisfy 0 <= min <= max");
  }
  for (double d : deltas)
    if (!(d >= 0.0)) throw std::invalid_argument("delta values must be >= 0");
  if (temperatures.empty()) throw std::invalid_argument("at least one temperature required");
  for (double t : temperatures)
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("temperatures must be >= 0");
  if (bond < 0 || bond >= n_sites) throw std::invalid_argument("--bond outside the ring");
  if (engine == Engine::closed_form) {
    if (n_sites == 4) {
      for (double t : temperatures)
        if (t != 0.0)
          throw std::invalid_argument("closed-form engine at N = 4 supports T = 0 only");
    } else if (n_sites != 5) {
      throw std::invalid_argument("closed-form engine supports N = 4 (T = 0) and N = 5");
    }
  }
  if (engine == Engine::oracle && n_sites > oracle::kMaxSites)
    throw std::invalid_argument("oracle engine supports N <= " + std::to_string(oracle::kMaxSites));
  if (engine == Engine::numeric && n_sites > kMaxSectorSites)
    throw std::invalid_argument("numeric engine supports N <= " + std::to_string(kMaxSectorSites));
}

std::vector<double> SweepConfig::delta_grid() const {
  if (!deltas.empty()) return deltas;
  std::vector<double> grid;
  // Index-based so the grid does not accumulate rounding.
  const auto count = static_cast<long>(std::floor((delta_max - delta_min) / delta_step + 1e-9));
  for (long i = 0; i <= count; ++i) grid.push_back(delta_min + static_cast<double>(i) * delta_step);
  return grid;
}

namespace {

double log_ground_degeneracy(const Spectrum& s) {
  const double e_min = s.min_energy();
  const double cut = e_min + oracle::kDegeneracyTol * std::max(1.0, std::abs(e_min));
  int g = 0;
  for (const Level& l : s.levels)
    if (l.energy <= cut) g += l.multiplicity;
  return std::log(static_cast<double>(g));
}

void fill_formula_measures(SweepRow& row) {
  const PairState<double> ps =
      pair_from_thermal(row.energy, row.gzz, row.anisotropy, row.n_sites, row.exchange);
  row.concurrence = concurrence(ps);
  row.linear_entropy = linear_entropy(ps);
}

void evaluate_closed(SweepRow& row) {
  const int n = row.n_sites;
  const double j = row.exchange;
  const double delta = row.anisotropy;
  if (n == 5) {
    const Spectrum s = spectrum_closed_n5(delta, j);
    if (row.temperature > 0.0) {
      const ThermoPoint tp = thermo_point(s, delta, row.temperature);
      row.ln_z = tp.ln_z;
      row.energy = tp.energy;
      row.gzz = tp.gzz;
    } else {
      const GroundState g = ground_state_n5(delta);
      row.ln_z = log_ground_degeneracy(s);
      row.energy = j * g.energy;
      row.gzz = 2.0 * g.slope / n;
    }
  } else if (n == 4 && row.temperature == 0.0) {
    const GroundState g = ground_state_n4(delta);
    row.ln_z = log_ground_degeneracy(spectrum_numeric({n, j, delta}));
    row.energy = j * g.energy;
    row.gzz = 2.0 * g.slope / n;
  } else {
    throw std::invalid_argument("closed-form engine supports N = 4 (T = 0) and N = 5");
  }
  fill_formula_measures(row);
}

void evaluate_numeric(SweepRow& row) {
  const ModelParams p{row.n_sites, row.exchange, row.anisotropy};
  const Spectrum s = spectrum_numeric(p);
  if (row.temperature > 0.0) {
    const double beta = 1.0 / row.temperature;
    row.ln_z = log_partition(s, beta);
    row.energy = internal_energy(s, beta);
    row.gzz = gzz_fd(p, beta);
  } else {
    if (p.n_sites > oracle::kMaxSites)
      throw capacity_error("numeric T = 0 correlator needs N <= " + std::to_string(oracle::kMaxSites));
    row.ln_z = log_ground_degeneracy(s);
    row.energy = s.min_energy();
    row.gzz = oracle::zz_correlation(oracle::ground_mixture(p), p.n_sites, 0, 1);
  }
  fill_formula_measures(row);
}

void evaluate_oracle(SweepRow& row, int bond) {
  const ModelParams p{row.n_sites, row.exchange, row.anisotropy};
  const Spectrum s = spectrum_numeric(p, NumericPath::full);
  oracle::DensityMatrix rho;
  if (row.temperature > 0.0) {
    const double beta = 1.0 / row.temperature;
    row.ln_z = log_partition(s, beta);
    row.energy = internal_energy(s, beta);
    rho = oracle::thermal_state(p, beta);
  } else {
    row.ln_z = log_ground_degeneracy(s);
    row.energy = s.min_energy();
    rho = oracle::ground_mixture(p);
  }
  const int other = (bond + 1) % p.n_sites;
  row.gzz = oracle::zz_correlation(rho, p.n_sites, bond, other);
  const oracle::PairMatrix pair = oracle::reduce_to_pair(rho, p.n_sites, bond, other);
  row.concurrence = oracle::wootters_concurrence(pair);
  row.linear_entropy = oracle::purity_linear_entropy(pair);
}

}  // namespace

SweepRow evaluate_point(int n_sites, double exchange, double delta, double temperature,
                        Engine engine, int bond) {
  if (!(delta >= 0.0)) throw std::invalid_argument("anisotropy must be >= 0");
  if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
  SweepRow row;
  row.n_sites = n_sites;
  row.exchange = exchange;
  row.anisotropy = delta;
  row.temperature = temperature;
  row.engine = engine;
  switch (engine) {
    case Engine::closed_form: evaluate_closed(row); break;
    case Engine::numeric: evaluate_numeric(row); break;
    case Engine::oracle: evaluate_oracle(row, bond); break;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid = cfg.delta_grid();
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * cfg.temperatures.size());
  for (double t : cfg.temperatures)
    for (double d : grid) rows.push_back(evaluate_point(cfg.n_sites, cfg.exchange, d, t, cfg.engine, cfg.bond));
  return rows;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.n_sites << ',' << format_real(r.exchange) << ',' << format_real(r.anisotropy) << ','
        << format_real(r.temperature) << ',' << format_real(r.ln_z) << ',' << format_real(r.energy)
        << ',' << format_real(r.gzz) << ',' << format_real(r.concurrence) << ','
        << format_real(r.linear_entropy) << ',' << to_string(r.engine) << '\n';
  }
}

ScalarFunction measure_function(int n_sites, double exchange, double temperature, Measure m,
                                Engine engine) {
  return [=](double delta) {
    const SweepRow row = evaluate_point(n_sites, exchange, delta, temperature, engine);
    return m == Measure::concurrence ? row.concurrence : row.linear_entropy;
  };
}

ExtremumResult find_extremum(const ScalarFunction& f, double lo, double hi, Sense sense,
                             double scan_step, double tol) {
  if (!(hi > lo)) throw std::invalid_argument("extremum interval must have hi > lo");
  if (!(scan_step > 0.0) || !(tol > 0.0)) throw std::invalid_argument("step and tolerance must be > 0");
  // Work on g = +/- f so the search always maximizes.
  const double sign = sense == Sense::maximize ? 1.0 : -1.0;
  auto g = [&](double x) { return sign * f(x); };

  const auto count = static_cast<long>(std::ceil((hi - lo) / scan_step - 1e-9));
  auto node = [&](long i) { return i >= count ? hi : lo + static_cast<double>(i) * scan_step; };
  long best = 0;
  double best_value = g(lo);
  for (long i = 1; i <= count; ++i) {
    const double v = g(node(i));
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }

  ExtremumResult res;
  res.scan_location = node(best);
  res.scan_value = sign * best_value;
  if (best == 0 || best == count) {
    res.at_boundary = true;
    res.location = res.scan_location;
    res.value = res.scan_value;
    res.bracket_lo = res.bracket_hi = res.location;
    return res;
  }

  double a = node(best - 1);
  double b = node(best + 1);
  res.bracket_lo = a;
  res.bracket_hi = b;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > tol) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  res.location = 0.5 * (a + b);
  res.value = f(res.location);
  return res;
}

ThresholdResult find_threshold(const ScalarFunction& f, double lo, double hi, double scan_step,
                               double tol) {
  if (!(hi > lo)) throw std::invalid_argument("threshold interval must have hi > lo");
  if (!(scan_step > 0.0) || !(tol > 0.0)) throw std::invalid_argument("step and tolerance must be > 0");
  if (f(lo) > 0.0) return {std::nullopt, "measure already positive at interval start"};

  const auto count = static_cast<long>(std::ceil((hi - lo) / scan_step - 1e-9));
  auto node = [&](long i) { return i >= count ? hi : lo + static_cast<double>(i) * scan_step; };
  double zero_side = lo;
  std::optional<double> positive_side;
  for (long i = 1; i <= count; ++i) {
    const double x = node(i);
    if (f(x) > 0.0) {
      positive_side = x;
      break;
    }
    zero_side = x;
  }
  if (!positive_side) return {std::nullopt, "measure never becomes positive on the interval"};

  double a = zero_side;
  double b = *positive_side;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    (f(mid) > 0.0 ? b : a) = mid;
  }
  return {0.5 * (a + b), {}};
}

}  // namespace xxz
