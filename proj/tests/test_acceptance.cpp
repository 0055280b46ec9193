// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fail.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "xxz/oracle.hpp"
#include "xxz/pairstate.hpp"
#include "xxz/spectrum.hpp"
#include "xxz/sweep.hpp"
#include "xxz/thermo.hpp"

namespace {

using namespace xxz;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

const std::vector<double> kGridDeltas{0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
const std::vector<double> kGridTemps{0.1, 0.5, 1.0, 2.0};

// U and G_zz from the spectrum route: closed levels at N = 5, sector
// diagonalization plus finite differences otherwise.
ThermoPoint spectral_point(int n, double delta, double t) {
  if (n == 5) return thermo_point(spectrum_closed_n5(delta), delta, t);
  const ModelParams p{n, 1.0, delta};
  const Spectrum s = spectrum_numeric(p);
  const double beta = 1.0 / t;
  return {delta, t, log_partition(s, beta), internal_energy(s, beta), gzz_fd(p, beta)};
}

Outcome spectrum_equivalence() {
  Outcome o;
  double worst = 0.0, worst_sum = 0.0;
  for (double delta : {0.0, 0.3, 1.0, 2.0, 5.0, 10.0}) {
    const auto closed_e = spectrum_closed_n5(delta).energies();
    const auto numeric_e = spectrum_numeric({5, 1.0, delta}, NumericPath::full).energies();
    if (closed_e.size() != numeric_e.size()) {
      o.require(false, "size mismatch");
      continue;
    }
    for (std::size_t i = 0; i < closed_e.size(); ++i)
      worst = std::max(worst, std::abs(closed_e[i] - numeric_e[i]));
    worst_sum = std::max(worst_sum, std::abs(std::accumulate(closed_e.begin(), closed_e.end(), 0.0) - 80.0));
  }
  o.require(worst <= 1e-10, fmt("max level error %.3g", worst));
  o.require(worst_sum <= 1e-9, fmt("trace error %.3g", worst_sum));
  if (o.passed) o.detail = fmt("max level error %.3g, trace error %.3g", worst, worst_sum);
  return o;
}

Outcome formula_oracle() {
  Outcome o;
  double worst = 0.0;
  for (int n : {4, 5})
    for (double delta : kGridDeltas)
      for (double t : kGridTemps) {
        const ThermoPoint tp = spectral_point(n, delta, t);
        const auto pair = oracle::reduce_to_pair(oracle::thermal_state({n, 1.0, delta}, 1.0 / t), n, 0, 1);
        const double dc =
            std::abs(concurrence_thermal(tp.energy, tp.gzz, delta, n) - oracle::wootters_concurrence(pair));
        const double de = std::abs(linear_entropy_thermal(tp.energy, tp.gzz, delta, n) -
                                   oracle::purity_linear_entropy(pair));
        worst = std::max({worst, dc, de});
      }
  o.require(worst <= 1e-9, fmt("max error %.3g", worst));
  if (o.passed) o.detail = fmt("max error %.3g", worst);
  return o;
}

Outcome reported_extrema() {
  Outcome o;
  const auto c = measure_function(5, 1.0, 1.5, Measure::concurrence, Engine::closed_form);
  const auto el = measure_function(5, 1.0, 1.5, Measure::linear_entropy, Engine::closed_form);
  const double cmax = find_extremum(c, 0.5, 6.0, Sense::maximize).location;
  const double elmin = find_extremum(el, 0.5, 6.0, Sense::minimize).location;
  o.require(std::abs(cmax - 3.1037) <= 0.01, fmt("argmax C = %.6f (off by %.4f)", cmax, cmax - 3.1037));
  o.require(std::abs(elmin - 3.8525) <= 0.01, fmt("argmin E_L = %.6f (off by %.4f)", elmin, elmin - 3.8525));
  o.detail += (o.detail.empty() ? "" : "; ") +
              fmt("argmax C = %.6f (ref 3.1037), argmin E_L = %.6f (ref 3.8525)", cmax, elmin);
  return o;
}

double ground_c5(double d) {
  const GroundState g = ground_state_n5(d);
  return concurrence_ground(g.energy, g.slope, d, 5);
}

Outcome zero_temperature_extrema() {
  Outcome o;
  const double cmax = find_extremum(ground_c5, 0.5, 3.0, Sense::maximize).location;
  const double elmin = find_extremum(
                           [](double d) {
                             const GroundState g = ground_state_n5(d);
                             return linear_entropy_ground(g.energy, g.slope, d, 5);
                           },
                           0.5, 3.0, Sense::minimize)
                           .location;
  const double h = 1e-4;
  const double slope = (ground_c5(1.0 + h) - ground_c5(1.0 - h)) / (2 * h);
  o.require(std::abs(cmax - 1.0) <= 1e-3, fmt("argmax C = %.6f", cmax));
  o.require(std::abs(elmin - 1.0) <= 1e-3, fmt("argmin E_L = %.6f", elmin));
  o.require(std::abs(slope) < 1e-6, fmt("|dC/dDelta| = %.3g", std::abs(slope)));
  if (o.passed) o.detail = fmt("argmax C = %.6f, argmin E_L = %.6f, |dC/dDelta| = %.3g", cmax, elmin, std::abs(slope));
  return o;
}

Outcome four_qubit() {
  Outcome o;
  const auto m = closed_n4_ground(1.0);
  o.require(std::abs(m.concurrence - 0.5) <= 1e-12, fmt("C = %.17g", m.concurrence));
  o.require(std::abs(m.linear_entropy - 5.0 / 12.0) <= 1e-12, fmt("E_L = %.17g", m.linear_entropy));
  const GroundState g = ground_state_n4(1.0);
  const double numeric = spectrum_numeric({4, 1.0, 1.0}, NumericPath::full).min_energy();
  o.require(std::abs(g.energy + 2.0) <= 1e-10 && std::abs(numeric + 2.0) <= 1e-10,
            fmt("E_gs closed %.12g numeric %.12g", g.energy, numeric));
  // derivative of the numerically diagonalized ground energy
  const double h = 1e-5;
  const double d_numeric = (spectrum_numeric({4, 1.0, 1.0 + h}, NumericPath::full).min_energy() -
                            spectrum_numeric({4, 1.0, 1.0 - h}, NumericPath::full).min_energy()) /
                           (2 * h);
  o.require(std::abs(g.slope + 4.0 / 3.0) <= 1e-10, fmt("closed slope %.12g", g.slope));
  o.require(std::abs(d_numeric + 4.0 / 3.0) <= 1e-8, fmt("numeric slope %.12g", d_numeric));
  if (o.passed) o.detail = fmt("numeric dE/dDelta = %.12f", d_numeric);
  return o;
}

Outcome derived_values() {
  Outcome o;
  const double e_numeric = spectrum_numeric({5, 1.0, 1.0}, NumericPath::full).min_energy();
  const double target_e = 1.0 - std::sqrt(5.0);
  const double target_c = (std::sqrt(5.0) - 1.0) / 5.0;
  const double c_oracle =
      oracle::wootters_concurrence(oracle::reduce_to_pair(oracle::ground_mixture({5, 1.0, 1.0}), 5, 0, 1));
  o.require(std::abs(e_numeric - target_e) <= 1e-10, fmt("E_gs = %.15g", e_numeric));
  o.require(std::abs(ground_state_n5(1.0).energy - target_e) <= 1e-10, "closed E_gs");
  o.require(std::abs(c_oracle - target_c) <= 1e-9, fmt("oracle C = %.15g", c_oracle));
  o.require(std::abs(ground_c5(1.0) - target_c) <= 1e-9, fmt("formula C = %.15g", ground_c5(1.0)));
  if (o.passed) o.detail = fmt("E_gs err %.3g, oracle C err %.3g", std::abs(e_numeric - target_e), std::abs(c_oracle - target_c));
  return o;
}

Outcome thermodynamic_identities() {
  Outcome o;
  double worst_u = 0.0, worst_g = 0.0;
  for (int n : {4, 5})
    for (double delta : kGridDeltas)
      for (double t : kGridTemps) {
        const double beta = 1.0 / t;
        auto lnz = [n](double d, double b) {
          const Spectrum s = n == 5 ? spectrum_closed_n5(d) : spectrum_numeric({n, 1.0, d});
          return log_partition(s, b);
        };
        const double u = n == 5 ? internal_energy(spectrum_closed_n5(delta), beta)
                                : internal_energy(spectrum_numeric({n, 1.0, delta}), beta);
        const double g = n == 5 ? gzz(spectrum_closed_n5(delta), beta) : oracle::gzz_trace({n, 1.0, delta}, beta);
        const double hb = 1e-6 * std::max(1.0, beta);
        const double u_fd = -(lnz(delta, beta + hb) - lnz(delta, beta - hb)) / (2 * hb);
        const double hd = 1e-5;
        const double g_fd = -2.0 / (n * beta) * (lnz(delta + hd, beta) - lnz(delta - hd, beta)) / (2 * hd);
        worst_u = std::max(worst_u, std::abs(u - u_fd) / std::abs(u));
        worst_g = std::max(worst_g, std::abs(g - g_fd) / std::abs(g));
      }
  o.require(worst_u <= 1e-5, fmt("U relative error %.3g", worst_u));
  o.require(worst_g <= 1e-5, fmt("G_zz relative error %.3g", worst_g));

  const Spectrum s = spectrum_closed_n5(1.0);
  const double u0 = internal_energy(s, 0.0);
  const double g0 = gzz(s, 0.0);
  const double c0 = concurrence_thermal(u0, g0, 1.0, 5);
  const double el0 = linear_entropy_thermal(u0, g0, 1.0, 5);
  o.require(std::abs(u0 - 2.5) <= 1e-6, fmt("U(beta=0) = %.12g", u0));
  o.require(std::abs(g0) <= 1e-6, fmt("G_zz(beta=0) = %.3g", g0));
  o.require(std::abs(c0) <= 1e-6, fmt("C(beta=0) = %.3g", c0));
  o.require(std::abs(el0 - 0.75) <= 1e-6, fmt("E_L(beta=0) = %.12g", el0));
  if (o.passed) o.detail = fmt("U rel err %.3g, G_zz rel err %.3g", worst_u, worst_g);
  return o;
}

Outcome threshold_behaviour() {
  Outcome o;
  std::vector<double> found;
  for (double t : {1.8, 2.0, 2.5}) {
    const ThresholdResult r =
        find_threshold(measure_function(5, 1.0, t, Measure::concurrence, Engine::closed_form), 0.0, 8.0);
    o.require(r.threshold.has_value(), fmt("no threshold at T = %.2f", t) + " (" + r.reason + ")");
    found.push_back(r.threshold.value_or(std::nan("")));
  }
  if (!o.passed) return o;
  o.require(found[2] > found[1] && found[1] > found[0], "thresholds not increasing");
  o.detail += (o.detail.empty() ? "" : "; ") +
              fmt("Delta_th(1.8) = %.5f, Delta_th(2.0) = %.5f, Delta_th(2.5) = %.5f", found[0], found[1], found[2]);
  return o;
}

Outcome isotropic_extrema_small_rings() {
  Outcome o;
  std::string where;
  for (int n : {6, 7, 8})
    for (Engine e : {Engine::numeric, Engine::oracle}) {
      const auto c = measure_function(n, 1.0, 0.0, Measure::concurrence, e);
      const auto el = measure_function(n, 1.0, 0.0, Measure::linear_entropy, e);
      const double cmax = find_extremum(c, 0.5, 1.5, Sense::maximize, 0.02, 1e-3).location;
      const double elmin = find_extremum(el, 0.5, 1.5, Sense::minimize, 0.02, 1e-3).location;
      const std::string tag = "N=" + std::to_string(n) + " " + std::string(to_string(e));
      o.require(std::abs(cmax - 1.0) <= 0.01, tag + fmt(" argmax C = %.5f", cmax));
      o.require(std::abs(elmin - 1.0) <= 0.01, tag + fmt(" argmin E_L = %.5f", elmin));
      if (!where.empty()) where += ", ";
      where += tag + fmt(" %.4f/%.4f", cmax, elmin);
    }
  if (o.passed) o.detail = where;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 spectrum equivalence", spectrum_equivalence},
      {"2 formula/oracle equivalence", formula_oracle},
      {"3 reported extrema at T=1.5", reported_extrema},
      {"4 zero-temperature extrema", zero_temperature_extrema},
      {"5 four-qubit closed forms", four_qubit},
      {"6 derived exact values", derived_values},
      {"7 thermodynamic identities", thermodynamic_identities},
      {"8 threshold behaviour", threshold_behaviour},
      {"9 isotropic extrema N=6..8", isotropic_extrema_small_rings},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.passed = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    std::printf("%s  criterion %s: %s\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
