#include "xxz/basis.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxz {

namespace {

std::uint32_t site_mask(int n_sites) {
  return n_sites == 32 ? ~0u : ((1u << n_sites) - 1u);
}

void check_sites(int n_sites) {
  if (n_sites < 2 || n_sites > kMaxSites)
    throw std::domain_error("ring length must be in [2, " + std::to_string(kMaxSites) +
                            "], got " + std::to_string(n_sites));
}

}  // namespace

SpinState::SpinState(std::uint32_t bits_, int n_sites_) : bits(bits_), n_sites(n_sites_) {
  check_sites(n_sites);
  if (bits & ~site_mask(n_sites))
    throw std::domain_error("spin pattern has bits beyond site " + std::to_string(n_sites - 1));
}

int SpinState::reversed() const { return std::popcount(bits); }

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::vector<SpinState> enumerate_sector(int n_sites, int r) {
  check_sites(n_sites);
  if (r < 0 || r > n_sites)
    throw std::domain_error("reversed-spin count " + std::to_string(r) + " outside [0, " +
                            std::to_string(n_sites) + "]");
  std::vector<SpinState> out;
  out.reserve(binomial(n_sites, r));
  if (r == 0) {
    out.emplace_back(0u, n_sites);
    return out;
  }
  // Gosper's hack walks fixed-popcount patterns in increasing order.
  const std::uint64_t limit = std::uint64_t{1} << n_sites;
  std::uint64_t v = (std::uint64_t{1} << r) - 1;
  while (v < limit) {
    out.emplace_back(static_cast<std::uint32_t>(v), n_sites);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

SpinState cyclic_shift(SpinState s) {
  const int n = s.n_sites;
  const std::uint32_t top = (s.bits >> (n - 1)) & 1u;
  SpinState out;
  out.n_sites = n;
  out.bits = ((s.bits << 1) | top) & site_mask(n);
  return out;
}

SpinState cyclic_shift(SpinState s, int times) {
  const int n = s.n_sites;
  times %= n;
  if (times < 0) times += n;
  if (times == 0) return s;
  SpinState out;
  out.n_sites = n;
  out.bits = ((s.bits << times) | (s.bits >> (n - times))) & site_mask(n);
  return out;
}

OrbitLocation locate_in_orbit(SpinState s) {
  OrbitLocation loc;
  loc.orbit.representative = s;
  SpinState cur = s;
  for (int l = 1; l <= s.n_sites; ++l) {
    cur = cyclic_shift(cur);
    if (cur == s) {
      loc.orbit.period = l;
      break;
    }
    if (cur.bits < loc.orbit.representative.bits) {
      loc.orbit.representative = cur;
      loc.shifts_to_representative = l;
    }
  }
  return loc;
}

Orbit orbit_of(SpinState s) { return locate_in_orbit(s).orbit; }

std::complex<double> momentum_phase(int n_sites, int k, long long power) {
  long long e = (static_cast<long long>(k) * power) % n_sites;
  if (e < 0) e += n_sites;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / n_sites;
  return std::polar(1.0, angle);
}

MomentumBasis momentum_basis(int n_sites, int r, int k) {
  check_sites(n_sites);
  if (k < 1 || k > n_sites)
    throw std::domain_error("momentum index " + std::to_string(k) + " outside [1, " +
                            std::to_string(n_sites) + "]");
  MomentumBasis basis;
  basis.n_sites = n_sites;
  basis.reversed = r;
  basis.k = k;
  for (const SpinState& s : enumerate_sector(n_sites, r)) {
    const Orbit orbit = orbit_of(s);
    if (orbit.representative != s) continue;
    // omega_k^d must be 1, otherwise the folded sum cancels.
    if ((static_cast<long long>(k) * orbit.period) % n_sites != 0) continue;
    basis.orbits.push_back(orbit);
    basis.weights.push_back(1.0 / std::sqrt(static_cast<double>(orbit.period)));
  }
  return basis;
}

Eigen::VectorXcd expand(const MomentumBasis& basis, std::size_t index) {
  const Orbit& orbit = basis.orbits.at(index);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << basis.n_sites);
  SpinState cur = orbit.representative;
  for (int n = 0; n < orbit.period; ++n) {
    v(cur.bits) += basis.weights[index] * momentum_phase(basis.n_sites, basis.k, n);
    cur = cyclic_shift(cur);
  }
  return v;
}

Eigen::MatrixXd shift_matrix(int n_sites) {
  check_sites(n_sites);
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    t(cyclic_shift(SpinState(static_cast<std::uint32_t>(i), n_sites)).bits, i) = 1.0;
  return t;
}

}  // namespace xxz
