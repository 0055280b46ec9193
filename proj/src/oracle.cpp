#include "xxz/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xxz::oracle {

namespace {

void check_capacity(const ModelParams& p) {
  p.validate();
  if (p.n_sites > kMaxSites)
    throw capacity_error("oracle limited to N <= " + std::to_string(kMaxSites));
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> diagonalize(const ModelParams& p) {
  check_capacity(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(full_matrix(p));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  return solver;
}

void check_site(int n_sites, int site) {
  if (site < 0 || site >= n_sites)
    throw std::domain_error("site " + std::to_string(site) + " outside ring of " +
                            std::to_string(n_sites));
}

// rho = V diag(w) V^T / sum(w)
DensityMatrix weighted_projector(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& weights) {
  const Eigen::MatrixXd rho = vectors * (weights / weights.sum()).asDiagonal() * vectors.transpose();
  return rho.cast<std::complex<double>>();
}

}  // namespace

DensityMatrix thermal_state(const ModelParams& p, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::domain_error("beta must be finite and >= 0");
  const auto solver = diagonalize(p);
  const Eigen::VectorXd& e = solver.eigenvalues();
  const Eigen::VectorXd w = (-beta * (e.array() - e.minCoeff())).exp();
  return weighted_projector(solver.eigenvectors(), w);
}

DensityMatrix ground_mixture(const ModelParams& p, double tol) {
  const auto solver = diagonalize(p);
  const Eigen::VectorXd& e = solver.eigenvalues();
  const double cut = e(0) + tol * std::max(1.0, std::abs(e(0)));
  const Eigen::VectorXd w = (e.array() <= cut).cast<double>();
  return weighted_projector(solver.eigenvectors(), w);
}

PairMatrix reduce_to_pair(const DensityMatrix& rho, int n_sites, int site_a, int site_b) {
  check_site(n_sites, site_a);
  check_site(n_sites, site_b);
  if (site_a == site_b) throw std::domain_error("pair sites must differ");
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  if (rho.rows() != dim || rho.cols() != dim) throw std::domain_error("density matrix size mismatch");

  const std::uint32_t bit_a = 1u << site_a;
  const std::uint32_t bit_b = 1u << site_b;
  auto embed = [&](std::uint32_t rest, int local) {
    return rest | ((local & 2) ? bit_a : 0u) | ((local & 1) ? bit_b : 0u);
  };

  PairMatrix out = PairMatrix::Zero();
  for (std::uint32_t rest = 0; rest < static_cast<std::uint32_t>(dim); ++rest) {
    if (rest & (bit_a | bit_b)) continue;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out(i, j) += rho(embed(rest, i), embed(rest, j));
  }
  return out;
}

double wootters_concurrence(const PairMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<PairMatrix> solver(rho);
  const Eigen::Vector4d p = solver.eigenvalues();
  if (p.minCoeff() < -1e-9) throw std::domain_error("pair matrix is not positive semidefinite");
  const PairMatrix root = solver.eigenvectors() *
                          p.cwiseMax(0.0).cwiseSqrt().cast<std::complex<double>>().asDiagonal() *
                          solver.eigenvectors().adjoint();
  PairMatrix flip = PairMatrix::Zero();
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  const PairMatrix tau = root * flip * root.conjugate();
  const Eigen::Vector4d l = Eigen::JacobiSVD<PairMatrix>(tau).singularValues();  // descending
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double purity_linear_entropy(const PairMatrix& rho) { return 1.0 - rho.squaredNorm(); }

double zz_correlation(const DensityMatrix& rho, int n_sites, int site_a, int site_b) {
  check_site(n_sites, site_a);
  check_site(n_sites, site_b);
  double acc = 0.0;
  for (Eigen::Index s = 0; s < rho.rows(); ++s) {
    const SpinState st(static_cast<std::uint32_t>(s), n_sites);
    acc += st.z(site_a) * st.z(site_b) * rho(s, s).real();
  }
  return acc;
}

double z_magnetization(const DensityMatrix& rho, int n_sites, int site) {
  check_site(n_sites, site);
  double acc = 0.0;
  for (Eigen::Index s = 0; s < rho.rows(); ++s)
    acc += SpinState(static_cast<std::uint32_t>(s), n_sites).z(site) * rho(s, s).real();
  return acc;
}

double gzz_trace(const ModelParams& p, double beta, int bond) {
  return zz_correlation(thermal_state(p, beta), p.n_sites, bond, (bond + 1) % p.n_sites);
}

}  // namespace xxz::oracle
