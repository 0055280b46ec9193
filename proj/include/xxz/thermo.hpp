#pragma once

#include "xxz/hamiltonian.hpp"
#include "xxz/spectrum.hpp"

namespace xxz {

/// Thermal data of one (Delta, T) point, k_B = 1.
struct ThermoPoint {
  double anisotropy = 0.0;
  double temperature = 0.0;
  double ln_z = 0.0;
  double energy = 0.0;  // U
  double gzz = 0.0;     // <sz_i sz_{i+1}>
};

/// ln sum_j m_j exp(-beta E_j), evaluated relative to the lowest level.
double log_partition(const Spectrum& s, double beta);

/// Boltzmann-weighted mean energy, U = -d ln Z / d beta.
double internal_energy(const Spectrum& s, double beta);

/// Nearest-neighbour sz-sz correlator (2 / (N J)) <dE/dDelta>, which equals
/// -(2 / (N J beta)) d ln Z / d Delta. Every level must carry a slope.
double gzz(const Spectrum& s, double beta);

inline constexpr double kDefaultFdStep = 1e-5;

/// The same correlator from a central difference of ln Z in Delta over the
/// numeric spectrum. The step is h, widened to h / (beta J) at high
/// temperature. beta = 0 returns 0 exactly.
double gzz_fd(const ModelParams& p, double beta, double h = kDefaultFdStep);

/// T > 0 only; zero temperature goes through the ground-state formulas.
ThermoPoint thermo_point(const Spectrum& s, double anisotropy, double temperature);

}  // namespace xxz
