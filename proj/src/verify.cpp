#include "xxz/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "xxz/basis.hpp"
#include "xxz/hamiltonian.hpp"
#include "xxz/oracle.hpp"
#include "xxz/pairstate.hpp"
#include "xxz/spectrum.hpp"
#include "xxz/sweep.hpp"
#include "xxz/thermo.hpp"

namespace xxz {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Check {
 public:
  Check(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void observe(double error) {
    if (std::isnan(error)) {
      failed_ = true;
      return;
    }
    result_.max_error = std::max(result_.max_error, error);
    if (error > result_.tolerance) failed_ = true;
  }

  void require(bool ok, const std::string& why) {
    if (!ok) {
      failed_ = true;
      if (result_.detail.empty()) result_.detail = why;
    }
  }

  void note(const std::string& text) {
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += text;
  }

  CheckResult finish() {
    result_.passed = !failed_;
    return result_;
  }

 private:
  CheckResult result_;
  bool failed_ = false;
};

const std::vector<double> kDeltaGrid{0.0, 0.5, 1.0, 2.5};
const std::vector<double> kClosedDeltas{0.0, 0.3, 1.0, 2.0, 5.0, 10.0};
const std::vector<double> kPairDeltas{0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
const std::vector<double> kPairTemps{0.1, 0.5, 1.0, 2.0};

double max_sorted_diff(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(8);
  os << x;
  return os.str();
}

Spectrum n5_spectrum(double delta, const VerifyOptions& opts) {
  return spectrum_closed_n5(opts.inject_delta_sign_fault ? -delta : delta);
}

// --- basis ---------------------------------------------------------------

CheckResult basis_completeness() {
  Check c("basis.completeness", 0.0);
  for (int n = 2; n <= 10; ++n) {
    std::uint64_t total = 0;
    for (int r = 0; r <= n; ++r) {
      const auto sector = enumerate_sector(n, r);
      std::size_t momenta = 0;
      for (int k = 1; k <= n; ++k) momenta += momentum_basis(n, r, k).size();
      c.observe(std::abs(static_cast<double>(sector.size()) - static_cast<double>(binomial(n, r))));
      c.observe(std::abs(static_cast<double>(momenta) - static_cast<double>(sector.size())));
      total += sector.size();
    }
    c.observe(std::abs(static_cast<double>(total) - std::ldexp(1.0, n)));
  }
  return c.finish();
}

CheckResult basis_shift_equivariance(int max_sites) {
  Check c("basis.shift_equivariance", 0.0);
  for (int n = 2; n <= max_sites; ++n) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      const SpinState s(b, n);
      const Orbit o = orbit_of(s);
      const Orbit o2 = orbit_of(cyclic_shift(s));
      c.require(o.representative == o2.representative && o.period == o2.period,
                "orbit changed under shift");
      c.require(n % o.period == 0 && cyclic_shift(o.representative, o.period) == o.representative,
                "period does not divide N");
      c.require(cyclic_shift(s, n) == s, "N shifts are not the identity");
    }
  }
  return c.finish();
}

CheckResult basis_momentum_eigenvectors(int max_sites) {
  Check c("basis.momentum_eigenvectors", 1e-12);
  for (int n = 2; n <= std::min(max_sites, 8); ++n) {
    const Eigen::MatrixXd t = shift_matrix(n);
    for (int r = 0; r <= n; ++r) {
      for (int k = 1; k <= n; ++k) {
        const MomentumBasis mb = momentum_basis(n, r, k);
        if (mb.empty()) continue;
        Eigen::MatrixXcd v(Eigen::Index{1} << n, static_cast<Eigen::Index>(mb.size()));
        for (std::size_t j = 0; j < mb.size(); ++j) v.col(static_cast<Eigen::Index>(j)) = expand(mb, j);
        const std::complex<double> eig = momentum_phase(n, k, -1);
        c.observe((t.cast<std::complex<double>>() * v - eig * v).cwiseAbs().maxCoeff());
        c.observe((v.adjoint() * v - Eigen::MatrixXcd::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff());
      }
    }
  }
  return c.finish();
}

// --- hamiltonian -----------------------------------------------------------

CheckResult hamiltonian_structure(int max_sites) {
  Check c("hamiltonian.structure", 1e-12);
  for (int n = 2; n <= max_sites; ++n) {
    const Eigen::MatrixXd t = shift_matrix(n);
    for (double delta : kDeltaGrid) {
      const ModelParams p{n, 1.0, delta};
      const Eigen::MatrixXd h = full_matrix(p);
      c.observe((h - h.transpose()).cwiseAbs().maxCoeff());
      c.observe((h * t - t * h).cwiseAbs().maxCoeff());
      c.observe(std::abs(h.trace() - 0.5 * n * std::ldexp(1.0, n)));
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
          if (std::popcount(static_cast<unsigned>(i)) != std::popcount(static_cast<unsigned>(j)))
            c.observe(std::abs(h(i, j)));
      for (int r = 0; r <= n; ++r)
        for (int k = 1; k <= n; ++k) {
          const Eigen::MatrixXcd b = block_matrix(p, r, k);
          if (b.size() > 0) c.observe((b - b.adjoint()).cwiseAbs().maxCoeff());
        }
    }
  }
  return c.finish();
}

CheckResult hamiltonian_sector_equivalence(int max_sites) {
  Check c("hamiltonian.sector_equivalence", 1e-9);
  for (int n = 2; n <= max_sites; ++n)
    for (double delta : kDeltaGrid) {
      const ModelParams p{n, 1.0, delta};
      c.observe(max_sorted_diff(spectrum_numeric(p, NumericPath::full).energies(),
                                spectrum_numeric(p, NumericPath::sectors).energies()));
    }
  return c.finish();
}

CheckResult hamiltonian_spin_flip(int max_sites) {
  Check c("hamiltonian.spin_flip_sectors", 1e-9);
  for (int n = 2; n <= max_sites; ++n)
    for (double delta : kDeltaGrid) {
      const ModelParams p{n, 1.0, delta};
      for (int r = 0; r <= n / 2; ++r)
        for (int k = 1; k <= n; ++k)
          c.observe(max_sorted_diff(to_vector(eig_self_adjoint(block_matrix(p, r, k))),
                                    to_vector(eig_self_adjoint(block_matrix(p, n - r, k)))));
    }
  return c.finish();
}

// --- spectrum --------------------------------------------------------------

CheckResult spectrum_closed_vs_numeric(const VerifyOptions& opts) {
  Check c("spectrum.closed_vs_numeric_n5", 1e-10);
  for (double delta : kClosedDeltas) {
    const double err = max_sorted_diff(n5_spectrum(delta, opts).energies(),
                                       spectrum_numeric({5, 1.0, delta}, NumericPath::full).energies());
    if (err > 1e-10) c.note("mismatch " + fmt(err) + " at Delta=" + fmt(delta));
    c.observe(err);
  }
  return c.finish();
}

CheckResult spectrum_trace_n5(const VerifyOptions& opts) {
  Check c("spectrum.eigenvalue_sum_n5", 1e-9);
  for (double delta : kClosedDeltas) {
    const auto e = n5_spectrum(delta, opts).energies();
    double sum = 0.0;
    for (double x : e) sum += x;
    c.observe(std::abs(sum - 80.0));
  }
  return c.finish();
}

CheckResult spectrum_slope_fd() {
  Check c("spectrum.slope_finite_difference", 1e-6);
  const double h = 1e-5;
  for (double delta : kClosedDeltas) {
    for (int k = 1; k <= 5; ++k)
      for (int sign : {-1, +1}) {
        const double fd = (closed::e2(delta + h, k, sign) - closed::e2(delta - h, k, sign)) / (2 * h);
        c.observe(std::abs(fd - closed::e2_slope(delta, k, sign)));
      }
    c.observe(std::abs((closed::e0(delta + h) - closed::e0(delta - h)) / (2 * h) - 2.5));
    c.observe(std::abs((closed::e1(delta + h, 1) - closed::e1(delta - h, 1)) / (2 * h) - 0.5));
    c.observe(std::abs((closed::n4_ground(delta + h) - closed::n4_ground(delta - h)) / (2 * h) -
                       closed::n4_ground_slope(delta)));
  }
  return c.finish();
}

CheckResult spectrum_even_degeneracy() {
  Check c("spectrum.even_degeneracy_n5", 0.0);
  for (double delta : kClosedDeltas) {
    const auto e = spectrum_numeric({5, 1.0, delta}, NumericPath::full).energies();
    std::size_t i = 0;
    while (i < e.size()) {
      std::size_t j = i;
      while (j < e.size() && e[j] - e[i] < 1e-8) ++j;
      c.require((j - i) % 2 == 0, "odd multiplicity at Delta=" + fmt(delta) + ", E=" + fmt(e[i]));
      i = j;
    }
  }
  return c.finish();
}

CheckResult spectrum_ground_levels() {
  Check c("spectrum.ground_levels", 1e-10);
  for (double delta : kClosedDeltas) {
    const Spectrum s = spectrum_numeric({5, 1.0, delta});
    const GroundState g = ground_state_n5(delta);
    c.observe(std::abs(g.energy - s.min_energy()));
    const Level& lowest = s.levels.front();
    c.require(lowest.sector && (lowest.sector->reversed == 2 || lowest.sector->reversed == 3),
              "N=5 ground level outside r=2/3 at Delta=" + fmt(delta));
  }
  for (double delta : {0.0, 0.5, 1.0, 2.0, 5.0})
    c.observe(std::abs(ground_state_n4(delta).energy - ground_energy_numeric({4, 1.0, delta})));
  return c.finish();
}

// --- thermo ----------------------------------------------------------------

Spectrum grid_spectrum(int n, double delta) {
  return n == 5 ? spectrum_closed_n5(delta) : spectrum_numeric({n, 1.0, delta});
}

double grid_gzz(int n, double delta, double beta) {
  return n == 5 ? gzz(spectrum_closed_n5(delta), beta) : oracle::gzz_trace({n, 1.0, delta}, beta);
}

CheckResult thermo_identities() {
  Check c("thermo.finite_difference_identities", 1e-5);
  for (int n : {4, 5})
    for (double delta : kPairDeltas)
      for (double t : kPairTemps) {
        const double beta = 1.0 / t;
        const Spectrum s = grid_spectrum(n, delta);
        const double hb = 1e-6 * std::max(1.0, 1.0 / beta);
        const double u_fd = -(log_partition(s, beta + hb) - log_partition(s, beta - hb)) / (2 * hb);
        const double u = internal_energy(s, beta);
        c.observe(std::abs(u - u_fd) / std::max(1.0, std::abs(u)));
        const double g = grid_gzz(n, delta, beta);
        const double g_fd = gzz_fd({n, 1.0, delta}, beta);
        c.observe(std::abs(g - g_fd) / std::max(1.0, std::abs(g)));
      }
  return c.finish();
}

CheckResult thermo_limits_and_bounds() {
  Check c("thermo.limits_and_bounds", 1e-12);
  for (double delta : kPairDeltas) {
    const Spectrum s = spectrum_closed_n5(delta);
    c.observe(std::abs(log_partition(s, 0.0) - std::log(32.0)));
    c.observe(std::abs(internal_energy(s, 0.0) - 2.5));
    c.observe(std::abs(gzz(s, 0.0)));
    double prev_u = std::numeric_limits<double>::infinity();
    for (double beta = 0.0; beta <= 20.0; beta += 0.25) {
      const double u = internal_energy(s, beta);
      c.require(u <= prev_u + 1e-12, "U increased on cooling at Delta=" + fmt(delta));
      c.require(std::abs(gzz(s, beta)) <= 1.0 + 1e-12, "|Gzz| > 1");
      prev_u = u;
    }
    // Constant shift of every level.
    Spectrum shifted = s;
    const double shift = 3.7;
    for (Level& l : shifted.levels) l.energy += shift;
    const double beta = 0.8;
    c.observe(std::abs(log_partition(shifted, beta) - (log_partition(s, beta) - beta * shift)));
    c.observe(std::abs(internal_energy(shifted, beta) - shift - internal_energy(s, beta)));
    c.observe(std::abs(gzz(shifted, beta) - gzz(s, beta)));
  }
  return c.finish();
}

// --- oracle / pair state -----------------------------------------------------

CheckResult oracle_symmetries(int max_sites) {
  Check c("oracle.bond_independence_and_zero_magnetization", 1e-10);
  for (int n = 3; n <= max_sites; ++n)
    for (double delta : {0.5, 1.0, 2.0}) {
      const ModelParams p{n, 1.0, delta};
      const oracle::DensityMatrix rho = oracle::thermal_state(p, 1.0);
      const oracle::PairMatrix first = oracle::reduce_to_pair(rho, n, 0, 1);
      for (int i = 0; i < n; ++i) {
        const oracle::PairMatrix pair = oracle::reduce_to_pair(rho, n, i, (i + 1) % n);
        c.observe((pair - first).cwiseAbs().maxCoeff());
        c.observe(std::abs(oracle::z_magnetization(rho, n, i)));
        c.observe(-std::min(0.0, Eigen::SelfAdjointEigenSolver<oracle::PairMatrix>(pair).eigenvalues().minCoeff()));
      }
      c.observe(std::abs(rho.trace().real() - 1.0));
    }
  return c.finish();
}

CheckResult pair_formula_vs_oracle() {
  Check c("pairstate.formula_vs_oracle", 1e-9);
  for (int n : {4, 5})
    for (double delta : kPairDeltas)
      for (double t : kPairTemps) {
        const double beta = 1.0 / t;
        const Spectrum s = grid_spectrum(n, delta);
        const double u = internal_energy(s, beta);
        const double g = grid_gzz(n, delta, beta);
        const PairState<double> ps = pair_from_thermal(u, g, delta, n);
        const double cf = concurrence(ps);
        const double ef = linear_entropy(ps);
        c.require(cf >= 0.0 && cf <= 1.0 && ef >= 0.0 && ef <= 0.75, "measure out of range");

        const ModelParams p{n, 1.0, delta};
        const oracle::PairMatrix pair = oracle::reduce_to_pair(oracle::thermal_state(p, beta), n, 0, 1);
        c.observe(std::abs(cf - oracle::wootters_concurrence(pair)));
        c.observe(std::abs(ef - oracle::purity_linear_entropy(pair)));
        c.observe((xstate_density(ps).cast<std::complex<double>>() - pair).cwiseAbs().maxCoeff());
      }
  return c.finish();
}

CheckResult pair_isotropic_symmetry(int max_sites) {
  Check c("pairstate.isotropic_gxx_equals_gzz", 1e-9);
  for (int n = 2; n <= max_sites; ++n)
    for (double t : kPairTemps) {
      const oracle::PairMatrix pair =
          oracle::reduce_to_pair(oracle::thermal_state({n, 1.0, 1.0}, 1.0 / t), n, 0, 1);
      const double gxx = 2.0 * pair(1, 2).real();
      const double gzz = (pair(0, 0) - pair(1, 1) - pair(2, 2) + pair(3, 3)).real();
      c.observe(std::abs(gxx - gzz));
    }
  return c.finish();
}

double c_ground_n5(double delta) {
  const GroundState g = ground_state_n5(delta);
  return concurrence_ground(g.energy, g.slope, delta, 5);
}

double el_ground_n5(double delta) {
  const GroundState g = ground_state_n5(delta);
  return linear_entropy_ground(g.energy, g.slope, delta, 5);
}

CheckResult pair_ground_extremum_n5() {
  Check c("pairstate.ground_extremum_n5", 1e-6);
  for (double eps : {0.01, 0.1}) {
    c.require(c_ground_n5(1.0) >= c_ground_n5(1.0 - eps) && c_ground_n5(1.0) >= c_ground_n5(1.0 + eps),
              "C(1) not maximal");
    c.require(el_ground_n5(1.0) <= el_ground_n5(1.0 - eps) && el_ground_n5(1.0) <= el_ground_n5(1.0 + eps),
              "E_L(1) not minimal");
  }
  const double h = 1e-4;
  c.observe(std::abs((c_ground_n5(1.0 + h) - c_ground_n5(1.0 - h)) / (2 * h)));
  for (double delta = 0.0; delta <= 10.0; delta += 0.25) {
    const GroundState g = ground_state_n5(delta);
    c.require(pair_from_ground(g.energy, g.slope, delta, 5).gxx <= 0.0, "gxx > 0 in the ground state");
  }
  return c.finish();
}

CheckResult pair_n4_closed_forms() {
  Check c("pairstate.four_site_closed_forms", 1e-12);
  for (double delta : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const GroundState g = ground_state_n4(delta);
    const auto closed = closed_n4_ground(delta);
    c.observe(std::abs(closed.concurrence - concurrence_ground(g.energy, g.slope, delta, 4)));
    c.observe(std::abs(closed.linear_entropy - linear_entropy_ground(g.energy, g.slope, delta, 4)));
  }
  const auto at_one = closed_n4_ground(1.0);
  c.observe(std::abs(at_one.concurrence - 0.5));
  c.observe(std::abs(at_one.linear_entropy - 5.0 / 12.0));
  return c.finish();
}

// --- reported values -----------------------------------------------------------

CheckResult reported_t15_extrema() {
  Check c("reported.t1_5_extrema_n5", 0.01);
  const auto cmax = find_extremum(measure_function(5, 1.0, 1.5, Measure::concurrence, Engine::closed_form),
                                  0.5, 6.0, Sense::maximize);
  const auto elmin = find_extremum(
      measure_function(5, 1.0, 1.5, Measure::linear_entropy, Engine::closed_form), 0.5, 6.0, Sense::minimize);
  c.observe(std::abs(cmax.location - 3.1037));
  c.observe(std::abs(elmin.location - 3.8525));
  c.require(!cmax.at_boundary && !elmin.at_boundary, "extremum on interval boundary");
  c.note("argmax C = " + fmt(cmax.location) + " (reported 3.1037, diff " + fmt(cmax.location - 3.1037) + ")");
  c.note("argmin E_L = " + fmt(elmin.location) + " (reported 3.8525, diff " + fmt(elmin.location - 3.8525) + ")");
  return c.finish();
}

CheckResult reported_zero_t_extrema() {
  Check c("reported.zero_temperature_extrema_n5", 1e-3);
  const auto cmax = find_extremum(measure_function(5, 1.0, 0.0, Measure::concurrence, Engine::closed_form),
                                  0.5, 3.0, Sense::maximize);
  const auto elmin = find_extremum(
      measure_function(5, 1.0, 0.0, Measure::linear_entropy, Engine::closed_form), 0.5, 3.0, Sense::minimize);
  c.observe(std::abs(cmax.location - 1.0));
  c.observe(std::abs(elmin.location - 1.0));
  return c.finish();
}

CheckResult reported_threshold_order() {
  Check c("reported.threshold_increases_with_t", 0.0);
  std::vector<double> found;
  for (double t : {1.8, 2.0, 2.5}) {
    const auto th = find_threshold(measure_function(5, 1.0, t, Measure::concurrence, Engine::closed_form), 0.0, 8.0);
    c.require(th.threshold.has_value(), "no threshold at T=" + fmt(t));
    if (th.threshold) {
      c.note("T=" + fmt(t) + ": " + fmt(*th.threshold));
      found.push_back(*th.threshold);
    }
  }
  c.require(found.size() == 3 && found[0] < found[1] && found[1] < found[2], "threshold not increasing in T");
  return c.finish();
}

CheckResult conjecture_spot_check(int max_sites) {
  Check c("conjecture.ground_extrema_at_isotropy", 0.01);
  if (max_sites < 6) c.note("skipped: needs max-sites >= 6");
  for (int n = 6; n <= std::min(max_sites, 8); ++n) {
    const auto cmax = find_extremum(measure_function(n, 1.0, 0.0, Measure::concurrence, Engine::oracle),
                                    0.5, 1.5, Sense::maximize);
    const auto elmin = find_extremum(
        measure_function(n, 1.0, 0.0, Measure::linear_entropy, Engine::oracle), 0.5, 1.5, Sense::minimize);
    c.observe(std::abs(cmax.location - 1.0));
    c.observe(std::abs(elmin.location - 1.0));
    c.note("N=" + std::to_string(n) + ": argmax C " + fmt(cmax.location) + ", argmin E_L " + fmt(elmin.location));
  }
  return c.finish();
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
  const int m = std::clamp(opts.max_sites, 2, oracle::kMaxSites);
  VerifyReport r;
  r.checks.push_back(basis_completeness());
  r.checks.push_back(basis_shift_equivariance(m));
  r.checks.push_back(basis_momentum_eigenvectors(m));
  r.checks.push_back(hamiltonian_structure(m));
  r.checks.push_back(hamiltonian_sector_equivalence(m));
  r.checks.push_back(hamiltonian_spin_flip(m));
  r.checks.push_back(spectrum_closed_vs_numeric(opts));
  r.checks.push_back(spectrum_trace_n5(opts));
  r.checks.push_back(spectrum_slope_fd());
  r.checks.push_back(spectrum_even_degeneracy());
  r.checks.push_back(spectrum_ground_levels());
  r.checks.push_back(thermo_identities());
  r.checks.push_back(thermo_limits_and_bounds());
  r.checks.push_back(oracle_symmetries(m));
  r.checks.push_back(pair_formula_vs_oracle());
  r.checks.push_back(pair_isotropic_symmetry(m));
  r.checks.push_back(pair_ground_extremum_n5());
  r.checks.push_back(pair_n4_closed_forms());
  r.checks.push_back(reported_t15_extrema());
  r.checks.push_back(reported_zero_t_extrema());
  r.checks.push_back(reported_threshold_order());
  r.checks.push_back(conjecture_spot_check(m));
  return r;
}

std::string report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["passed"] = report.all_passed();
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    j["checks"].push_back({{"check", c.name},
                           {"status", c.passed ? "pass" : "fail"},
                           {"max_error", c.max_error},
                           {"tolerance", c.tolerance},
                           {"detail", c.detail}});
  }
  return j.dump(2);
}

}  // namespace xxz
