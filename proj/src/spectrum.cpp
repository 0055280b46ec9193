#include "xxz/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace xxz {

int Spectrum::total_dim() const {
  int dim = 0;
  for (const Level& l : levels) dim += l.multiplicity;
  return dim;
}

bool Spectrum::has_slopes() const {
  return std::all_of(levels.begin(), levels.end(), [](const Level& l) { return l.slope.has_value(); });
}

double Spectrum::min_energy() const {
  if (levels.empty()) throw std::domain_error("empty spectrum");
  double e = levels.front().energy;
  for (const Level& l : levels) e = std::min(e, l.energy);
  return e;
}

std::vector<double> Spectrum::energies() const {
  std::vector<double> out;
  out.reserve(total_dim());
  for (const Level& l : levels) out.insert(out.end(), l.multiplicity, l.energy);
  std::sort(out.begin(), out.end());
  return out;
}

void Spectrum::sort() {
  std::stable_sort(levels.begin(), levels.end(),
                   [](const Level& a, const Level& b) { return a.energy < b.energy; });
}

Spectrum spectrum_closed_n5(double delta, double exchange) {
  Spectrum s;
  s.n_sites = 5;
  s.exchange = exchange;
  s.levels.reserve(16);
  auto add = [&](double e, double slope, int r, int k) {
    s.levels.push_back({exchange * e, exchange * slope, 2, Sector{r, k}});
  };
  add(closed::e0(delta), 2.5, 0, 5);
  for (int k = 1; k <= 5; ++k) {
    add(closed::e1(delta, k), 0.5, 1, k);
    add(closed::e2(delta, k, +1), closed::e2_slope(delta, k, +1), 2, k);
    add(closed::e2(delta, k, -1), closed::e2_slope(delta, k, -1), 2, k);
  }
  s.sort();
  return s;
}

GroundState ground_state_n5(double delta) {
  if (!(delta >= 0.0)) throw std::domain_error("anisotropy must be >= 0");
  const GroundState g{closed::e2(delta, 1, -1), closed::e2_slope(delta, 1, -1)};
  const double lowest = spectrum_closed_n5(delta).min_energy();
  if (g.energy > lowest + 1e-12 * std::max(1.0, std::abs(lowest)))
    throw std::domain_error("E_{2,1-} is not the ground level at Delta = " + std::to_string(delta));
  return g;
}

GroundState ground_state_n4(double delta) {
  if (!(delta >= 0.0)) throw std::domain_error("anisotropy must be >= 0");
  return {closed::n4_ground(delta), closed::n4_ground_slope(delta)};
}

Spectrum spectrum_numeric(const ModelParams& p, NumericPath via) {
  p.validate();
  Spectrum s;
  s.n_sites = p.n_sites;
  s.exchange = p.exchange;
  if (via == NumericPath::full) {
    const Eigen::VectorXd ev = eig_self_adjoint(full_matrix(p));
    s.levels.reserve(ev.size());
    for (double e : ev) s.levels.push_back({e, std::nullopt, 1, std::nullopt});
  } else {
    if (p.n_sites > kMaxSectorSites)
      throw capacity_error("sector path limited to N <= " + std::to_string(kMaxSectorSites));
    s.levels.reserve(std::size_t{1} << p.n_sites);
    for (int r = 0; r <= p.n_sites; ++r) {
      for (int k = 1; k <= p.n_sites; ++k) {
        const MomentumBasis basis = momentum_basis(p.n_sites, r, k);
        if (basis.empty()) continue;
        for (double e : eig_self_adjoint(block_matrix(p, basis)))
          s.levels.push_back({e, std::nullopt, 1, Sector{r, k}});
      }
    }
  }
  s.sort();
  return s;
}

double ground_energy_numeric(const ModelParams& p) {
  return spectrum_numeric(p, NumericPath::sectors).min_energy();
}

}  // namespace xxz
