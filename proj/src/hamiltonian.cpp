#include "xxz/hamiltonian.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace xxz {

void ModelParams::validate() const {
  if (n_sites < 2 || n_sites > kMaxSites)
    throw std::domain_error("ring length must be in [2, " + std::to_string(kMaxSites) + "]");
  if (!std::isfinite(exchange) || !std::isfinite(anisotropy))
    throw std::domain_error("couplings must be finite");
}

int bond_zz_sum(SpinState s) {
  int sum = 0;
  for (int i = 0; i < s.n_sites; ++i) sum += s.z(i) * s.z((i + 1) % s.n_sites);
  return sum;
}

std::vector<Term> apply_h(const ModelParams& p, SpinState s) {
  const int n = s.n_sites;
  std::vector<Term> out;
  out.push_back({s, 0.5 * p.exchange * (n + p.anisotropy * bond_zz_sum(s))});
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (s.z(i) == s.z(j)) continue;
    SpinState t = s;
    t.bits ^= (1u << i) | (1u << j);
    bool merged = false;
    for (std::size_t m = 1; m < out.size(); ++m) {
      if (out[m].target == t) {
        out[m].amplitude += p.exchange;
        merged = true;
      }
    }
    if (!merged) out.push_back({t, p.exchange});
  }
  return out;
}

Eigen::MatrixXd full_matrix(const ModelParams& p) {
  p.validate();
  if (p.n_sites > kMaxFullSites)
    throw capacity_error("full matrix limited to N <= " + std::to_string(kMaxFullSites));
  const Eigen::Index dim = Eigen::Index{1} << p.n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col)
    for (const Term& t : apply_h(p, SpinState(static_cast<std::uint32_t>(col), p.n_sites)))
      h(t.target.bits, col) += t.amplitude;
  return h;
}

// <a|H|b> = sum over terms (s', amp) of H|rep_b> lying in orbit a of
//   amp * sqrt(d_b / d_a) * omega_k^{l}, with T^l s' = rep_a.
Eigen::MatrixXcd block_matrix(const ModelParams& p, const MomentumBasis& basis) {
  p.validate();
  if (basis.n_sites != p.n_sites) throw std::domain_error("basis and model ring lengths differ");
  if (p.n_sites > kMaxSectorSites)
    throw capacity_error("sector blocks limited to N <= " + std::to_string(kMaxSectorSites));
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  std::unordered_map<std::uint32_t, Eigen::Index> index_of;
  index_of.reserve(basis.size());
  for (Eigen::Index a = 0; a < dim; ++a) index_of.emplace(basis.orbits[a].representative.bits, a);

  for (Eigen::Index b = 0; b < dim; ++b) {
    const Orbit& ob = basis.orbits[b];
    for (const Term& t : apply_h(p, ob.representative)) {
      const OrbitLocation loc = locate_in_orbit(t.target);
      const auto it = index_of.find(loc.orbit.representative.bits);
      if (it == index_of.end()) continue;  // inadmissible orbit: projects to zero
      const Eigen::Index a = it->second;
      const double scale = std::sqrt(static_cast<double>(ob.period) / basis.orbits[a].period);
      h(a, b) += t.amplitude * scale *
                 momentum_phase(p.n_sites, basis.k, loc.shifts_to_representative);
    }
  }
  return h;
}

Eigen::MatrixXcd block_matrix(const ModelParams& p, int r, int k) {
  return block_matrix(p, momentum_basis(p.n_sites, r, k));
}

}  // namespace xxz
