#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <stdexcept>

#include <Eigen/Dense>

namespace xxz {

/// Nearest-neighbour two-qubit state of a translation- and spin-flip-symmetric
/// ring, fixed by two correlators:
///   gxx = <sx_i sx_{i+1}> = <sy_i sy_{i+1}>,  gzz = <sz_i sz_{i+1}>.
/// In the basis |00>, |01>, |10>, |11> (0 = spin up) it is the X state
///   diag((1+gzz)/4, (1-gzz)/4, (1-gzz)/4, (1+gzz)/4), rho_{01,10} = gxx/2.
template <std::floating_point Scalar = double>
struct PairState {
  Scalar gxx{};
  Scalar gzz{};
};

/// Thermal pair state from the energy per site: U/(N J) = (1 + 2 gxx + Delta gzz)/2.
template <std::floating_point Scalar>
PairState<Scalar> pair_from_thermal(Scalar energy, Scalar gzz, Scalar delta, int n_sites,
                                    Scalar exchange = Scalar(1)) {
  const Scalar per_site = energy / (Scalar(n_sites) * exchange);
  return {per_site - Scalar(0.5) - delta * gzz / Scalar(2), gzz};
}

/// Ground-state pair state; gzz = (2/N) dE_gs/dDelta by Hellmann-Feynman.
template <std::floating_point Scalar>
PairState<Scalar> pair_from_ground(Scalar energy, Scalar slope, Scalar delta, int n_sites,
                                   Scalar exchange = Scalar(1)) {
  return pair_from_thermal(energy, Scalar(2) * slope / (Scalar(n_sites) * exchange), delta,
                           n_sites, exchange);
}

/// C = max(0, |gxx| - gzz/2 - 1/2).
template <std::floating_point Scalar>
Scalar concurrence(const PairState<Scalar>& ps) {
  const Scalar c = std::abs(ps.gxx) - ps.gzz / Scalar(2) - Scalar(0.5);
  return std::max(Scalar(0), c);
}

/// E_L = 1 - Tr(rho^2) = 1 - [2 gxx^2 + gzz^2 + 1]/4. Values above 3/4 mean
/// the inputs are inconsistent and throw.
template <std::floating_point Scalar>
Scalar linear_entropy(const PairState<Scalar>& ps) {
  const Scalar el =
      Scalar(1) - (Scalar(2) * ps.gxx * ps.gxx + ps.gzz * ps.gzz + Scalar(1)) / Scalar(4);
  if (el > Scalar(0.75) + Scalar(1e-12)) throw std::logic_error("linear entropy exceeds 3/4");
  return el;
}

template <std::floating_point Scalar>
Scalar concurrence_thermal(Scalar energy, Scalar gzz, Scalar delta, int n_sites,
                           Scalar exchange = Scalar(1)) {
  return concurrence(pair_from_thermal(energy, gzz, delta, n_sites, exchange));
}

template <std::floating_point Scalar>
Scalar concurrence_ground(Scalar energy, Scalar slope, Scalar delta, int n_sites,
                          Scalar exchange = Scalar(1)) {
  return concurrence(pair_from_ground(energy, slope, delta, n_sites, exchange));
}

template <std::floating_point Scalar>
Scalar linear_entropy_thermal(Scalar energy, Scalar gzz, Scalar delta, int n_sites,
                              Scalar exchange = Scalar(1)) {
  return linear_entropy(pair_from_thermal(energy, gzz, delta, n_sites, exchange));
}

template <std::floating_point Scalar>
Scalar linear_entropy_ground(Scalar energy, Scalar slope, Scalar delta, int n_sites,
                             Scalar exchange = Scalar(1)) {
  return linear_entropy(pair_from_ground(energy, slope, delta, n_sites, exchange));
}

template <std::floating_point Scalar>
struct PairMeasures {
  Scalar concurrence{};
  Scalar linear_entropy{};
};

/// Four-site ground state in closed form:
///   C   = (Delta + 8) / (4 sqrt(Delta^2 + 8)) - 1/4
///   E_L = 11/16 - Delta / (8 sqrt(Delta^2 + 8)) - (Delta^2 + 32) / (16 (Delta^2 + 8))
template <std::floating_point Scalar>
PairMeasures<Scalar> closed_n4_ground(Scalar delta) {
  if (!(delta >= Scalar(0))) throw std::domain_error("anisotropy must be >= 0");
  const Scalar d2 = delta * delta + Scalar(8);
  const Scalar root = std::sqrt(d2);
  return {(delta + Scalar(8)) / (Scalar(4) * root) - Scalar(0.25),
          Scalar(11) / Scalar(16) - delta / (Scalar(8) * root) -
              (delta * delta + Scalar(32)) / (Scalar(16) * d2)};
}

/// Explicit 4x4 density matrix of the X state; throws if it has an
/// eigenvalue below -1e-9.
template <std::floating_point Scalar>
Eigen::Matrix<Scalar, 4, 4> xstate_density(const PairState<Scalar>& ps) {
  const Scalar parallel = (Scalar(1) + ps.gzz) / Scalar(4);
  const Scalar antiparallel = (Scalar(1) - ps.gzz) / Scalar(4);
  const Scalar lowest = std::min(parallel, antiparallel - std::abs(ps.gxx) / Scalar(2));
  if (lowest < Scalar(-1e-9)) throw std::domain_error("correlators do not describe a density matrix");
  Eigen::Matrix<Scalar, 4, 4> rho = Eigen::Matrix<Scalar, 4, 4>::Zero();
  rho.diagonal() << parallel, antiparallel, antiparallel, parallel;
  rho(1, 2) = rho(2, 1) = ps.gxx / Scalar(2);
  return rho;
}

}  // namespace xxz
