#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "xxz/basis.hpp"

namespace xxz {

/// Thrown when a dense construction would exceed its size guard.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kMaxFullSites = 14;
inline constexpr int kMaxSectorSites = 16;

/// Periodic XXZ ring
///   H = (J/2) sum_i (1 + sx_i sx_{i+1} + sy_i sy_{i+1} + Delta sz_i sz_{i+1}),
/// site N+1 identified with site 1. The constant per bond is kept.
struct ModelParams {
  int n_sites = 5;
  double exchange = 1.0;
  double anisotropy = 1.0;

  /// Requires 2 <= N <= 24 and finite couplings. Negative anisotropy is
  /// representable (finite differences step below zero); public entry points
  /// that need Delta >= 0 check it themselves.
  void validate() const;
  ModelParams with_anisotropy(double delta) const { return {n_sites, exchange, delta}; }
};

struct Term {
  SpinState target;
  double amplitude;
};

/// H|s> as a short list: the diagonal entry first, then one hop per
/// antiparallel bond (merged when two bonds produce the same target, as on N = 2).
std::vector<Term> apply_h(const ModelParams& p, SpinState s);

/// Dense 2^N x 2^N real-symmetric matrix. Guarded at N <= 14.
Eigen::MatrixXd full_matrix(const ModelParams& p);

/// H restricted to a momentum basis; entry (a, b) = <a|H|b>.
Eigen::MatrixXcd block_matrix(const ModelParams& p, const MomentumBasis& basis);
Eigen::MatrixXcd block_matrix(const ModelParams& p, int r, int k);

/// sum_i sz_i sz_{i+1} is diagonal; this is its value on `s`.
int bond_zz_sum(SpinState s);

}  // namespace xxz
