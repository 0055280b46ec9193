#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace xxz {

inline constexpr int kMaxSites = 24;

/// Computational basis configuration of an N-site ring.
/// Bit i holds site i; a set bit is a reversed spin (sigma_z = -1).
struct SpinState {
  std::uint32_t bits = 0;
  int n_sites = 0;

  SpinState() = default;
  SpinState(std::uint32_t bits, int n_sites);

  int reversed() const;
  /// sigma_z eigenvalue (+1 or -1) at `site`.
  int z(int site) const { return ((bits >> site) & 1u) ? -1 : 1; }

  friend bool operator==(const SpinState&, const SpinState&) = default;
  friend auto operator<=>(const SpinState&, const SpinState&) = default;
};

struct Orbit {
  SpinState representative;
  int period = 0;
};

/// Where a state sits inside its translation orbit.
struct OrbitLocation {
  Orbit orbit;
  /// Smallest l >= 0 with shift^l(state) == representative.
  int shifts_to_representative = 0;
};

/// Orthonormal momentum basis of the sector with `reversed` flipped spins.
/// Vector j is sum_{n<d_j} omega_k^n T^n |rep_j> / sqrt(d_j), omega_k = exp(2 pi i k / N).
struct MomentumBasis {
  int n_sites = 0;
  int reversed = 0;
  int k = 0;
  std::vector<Orbit> orbits;
  std::vector<double> weights;  // 1/sqrt(period)

  std::size_t size() const { return orbits.size(); }
  bool empty() const { return orbits.empty(); }
};

std::uint64_t binomial(int n, int r);

/// All states with `r` reversed spins, ascending.
std::vector<SpinState> enumerate_sector(int n_sites, int r);

/// T|m_1 ... m_N> = |m_N m_1 ... m_{N-1}>: site i moves to site i+1 (mod N).
SpinState cyclic_shift(SpinState s);
SpinState cyclic_shift(SpinState s, int times);

Orbit orbit_of(SpinState s);
OrbitLocation locate_in_orbit(SpinState s);

/// exp(2 pi i k p / N), reduced mod N before evaluation.
std::complex<double> momentum_phase(int n_sites, int k, long long power);

MomentumBasis momentum_basis(int n_sites, int r, int k);

/// Basis vector `index` expanded over the full 2^N computational basis.
Eigen::VectorXcd expand(const MomentumBasis& basis, std::size_t index);

/// Permutation matrix of cyclic_shift on the full 2^N space.
Eigen::MatrixXd shift_matrix(int n_sites);

}  // namespace xxz
