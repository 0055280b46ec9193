#include "xxz/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {

void check_inputs(const Spectrum& s, double beta) {
  if (s.levels.empty()) throw std::domain_error("empty spectrum");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::domain_error("beta must be finite and >= 0");
}

// Boltzmann average of f(level) with weights shifted by the lowest energy.
template <typename F>
double boltzmann_mean(const Spectrum& s, double beta, F&& f) {
  const double e_min = s.min_energy();
  double z = 0.0;
  double acc = 0.0;
  for (const Level& l : s.levels) {
    const double w = l.multiplicity * std::exp(-beta * (l.energy - e_min));
    z += w;
    acc += w * f(l);
  }
  return acc / z;
}

}  // namespace

double log_partition(const Spectrum& s, double beta) {
  check_inputs(s, beta);
  const double e_min = s.min_energy();
  double z = 0.0;
  for (const Level& l : s.levels) z += l.multiplicity * std::exp(-beta * (l.energy - e_min));
  return -beta * e_min + std::log(z);
}

double internal_energy(const Spectrum& s, double beta) {
  check_inputs(s, beta);
  return boltzmann_mean(s, beta, [](const Level& l) { return l.energy; });
}

double gzz(const Spectrum& s, double beta) {
  check_inputs(s, beta);
  if (!s.has_slopes())
    throw std::domain_error("spectrum lacks dE/dDelta; use the finite-difference correlator");
  const double mean_slope = boltzmann_mean(s, beta, [](const Level& l) { return *l.slope; });
  return 2.0 * mean_slope / (s.n_sites * s.exchange);
}

double gzz_fd(const ModelParams& p, double beta, double h) {
  p.validate();
  if (!(beta >= 0.0)) throw std::domain_error("beta must be >= 0");
  if (!(h > 0.0)) throw std::domain_error("finite-difference step must be > 0");
  if (beta == 0.0) return 0.0;  // Tr(sz sz) = 0
  // ln Z moves on the scale 1/(beta J) in Delta; a fixed step loses digits at high T.
  const double step = h * std::max(1.0, 1.0 / (beta * p.exchange));
  const double up = log_partition(spectrum_numeric(p.with_anisotropy(p.anisotropy + step)), beta);
  const double down = log_partition(spectrum_numeric(p.with_anisotropy(p.anisotropy - step)), beta);
  return -2.0 / (p.n_sites * beta * p.exchange) * (up - down) / (2.0 * step);
}

ThermoPoint thermo_point(const Spectrum& s, double anisotropy, double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("thermal path needs T > 0");
  const double beta = 1.0 / temperature;
  return {anisotropy, temperature, log_partition(s, beta), internal_energy(s, beta), gzz(s, beta)};
}

}  // namespace xxz
