#pragma once

#include <cmath>
#include <concepts>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "xxz/hamiltonian.hpp"

namespace xxz {

struct Sector {
  int reversed = 0;
  int k = 0;
  friend bool operator==(const Sector&, const Sector&) = default;
};

struct Level {
  double energy = 0.0;
  std::optional<double> slope;  // dE/dDelta, closed forms only
  int multiplicity = 1;
  std::optional<Sector> sector;
};

struct Spectrum {
  int n_sites = 0;
  double exchange = 1.0;
  std::vector<Level> levels;  // ascending in energy

  int total_dim() const;
  bool complete() const { return total_dim() == (1 << n_sites); }
  bool has_slopes() const;
  double min_energy() const;
  /// Energies repeated by multiplicity, ascending.
  std::vector<double> energies() const;
  void sort();
};

struct GroundState {
  double energy = 0.0;
  double slope = 0.0;  // dE_gs/dDelta
};

/// Relative off-diagonal tolerance accepted as self-adjoint.
inline constexpr double kSelfAdjointTol = 1e-12;

/// All eigenvalues of a real-symmetric or complex-Hermitian matrix, ascending.
template <typename Derived>
Eigen::VectorXd eig_self_adjoint(const Eigen::MatrixBase<Derived>& m) {
  using MatrixType = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw std::domain_error("eigenvalues need a square matrix");
  if (m.size() == 0) return Eigen::VectorXd();
  const MatrixType a = m;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > kSelfAdjointTol * scale)
    throw std::domain_error("matrix is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<MatrixType> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  return solver.eigenvalues();
}

// Closed-form five-site levels (J = 1). Index k runs 1..5.
namespace closed {

template <std::floating_point Scalar>
Scalar cos_2k(int k, int n = 5) {
  return std::cos(Scalar(2) * k * std::numbers::pi_v<Scalar> / n);
}
template <std::floating_point Scalar>
Scalar cos_4k(int k, int n = 5) {
  return std::cos(Scalar(4) * k * std::numbers::pi_v<Scalar> / n);
}

/// All spins up: 5[1 + (Delta - 1)/2].
template <std::floating_point Scalar>
Scalar e0(Scalar delta) {
  return Scalar(5) * (Scalar(1) + (delta - Scalar(1)) / Scalar(2));
}

/// One magnon with momentum k.
template <std::floating_point Scalar>
Scalar e1(Scalar delta, int k) {
  return Scalar(3) + (delta - Scalar(1)) / Scalar(2) + Scalar(2) * cos_2k<Scalar>(k);
}

template <std::floating_point Scalar>
Scalar e2_root(Scalar delta, int k) {
  const Scalar shifted = delta - cos_4k<Scalar>(k);
  return std::sqrt(shifted * shifted + Scalar(2) * (Scalar(1) + cos_2k<Scalar>(k)));
}

/// Two reversed spins, eigenvalue of the 2x2 momentum block; sign = +1 or -1.
template <std::floating_point Scalar>
Scalar e2(Scalar delta, int k, int sign) {
  return (Scalar(5) - delta + Scalar(2) * cos_4k<Scalar>(k)) / Scalar(2) +
         Scalar(sign) * e2_root(delta, k);
}

template <std::floating_point Scalar>
Scalar e2_slope(Scalar delta, int k, int sign) {
  return Scalar(-0.5) + Scalar(sign) * (delta - cos_4k<Scalar>(k)) / e2_root(delta, k);
}

/// Four-site ground state: 2 - Delta - sqrt(Delta^2 + 8).
template <std::floating_point Scalar>
Scalar n4_ground(Scalar delta) {
  return Scalar(2) - delta - std::sqrt(delta * delta + Scalar(8));
}

template <std::floating_point Scalar>
Scalar n4_ground_slope(Scalar delta) {
  return Scalar(-1) - delta / std::sqrt(delta * delta + Scalar(8));
}

}  // namespace closed

/// 32 levels of the five-site ring in closed form, each with multiplicity 2
/// (sector r paired with 5 - r by the global spin flip) and dE/dDelta attached.
Spectrum spectrum_closed_n5(double delta, double exchange = 1.0);

/// E_{2,1-} and its slope; throws std::domain_error if it is not the minimum
/// of the closed-form spectrum at this Delta.
GroundState ground_state_n5(double delta);
GroundState ground_state_n4(double delta);

enum class NumericPath { full, sectors };

/// Eigenvalues only (no slopes). Full path: N <= 14; sectors: N <= 16.
Spectrum spectrum_numeric(const ModelParams& p, NumericPath via = NumericPath::sectors);

/// Lowest eigenvalue from the sector path.
double ground_energy_numeric(const ModelParams& p);

}  // namespace xxz
