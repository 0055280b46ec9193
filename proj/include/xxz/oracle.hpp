#pragma once

#include <Eigen/Dense>

#include "xxz/hamiltonian.hpp"

// Brute-force reference path: full density matrices, partial traces and the
// general two-qubit concurrence. Nothing here uses momentum sectors or the
// closed-form levels.
namespace xxz::oracle {

inline constexpr int kMaxSites = 10;
inline constexpr double kDegeneracyTol = 1e-9;

using DensityMatrix = Eigen::MatrixXcd;
using PairMatrix = Eigen::Matrix4cd;

/// exp(-beta H) / Z from a full eigendecomposition.
DensityMatrix thermal_state(const ModelParams& p, double beta);

/// Equal-weight mixture over every eigenvector within `tol` of the lowest
/// energy: the beta -> infinity limit of thermal_state.
DensityMatrix ground_mixture(const ModelParams& p, double tol = kDegeneracyTol);

/// Partial trace onto sites (a, b). Pair basis index is 2 * bit_a + bit_b.
PairMatrix reduce_to_pair(const DensityMatrix& rho, int n_sites, int site_a, int site_b);

/// max(0, l1 - l2 - l3 - l4) with l_i the singular values of
/// sqrt(rho) (sy x sy) conj(sqrt(rho)), i.e. the square roots of the
/// eigenvalues of rho (sy x sy) rho* (sy x sy).
double wootters_concurrence(const PairMatrix& rho);

/// 1 - Tr(rho^2).
double purity_linear_entropy(const PairMatrix& rho);

/// <sz_a sz_b> in a full density matrix.
double zz_correlation(const DensityMatrix& rho, int n_sites, int site_a, int site_b);
double z_magnetization(const DensityMatrix& rho, int n_sites, int site);

/// Tr[exp(-beta H) sz_bond sz_{bond+1}] / Z.
double gzz_trace(const ModelParams& p, double beta, int bond = 0);

}  // namespace xxz::oracle
