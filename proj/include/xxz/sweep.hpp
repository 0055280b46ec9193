#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xxz {

/// closed_form: five-site levels (any T) or four-site ground state (T = 0).
/// numeric: momentum-sector spectrum, G_zz by finite differences of ln Z.
/// oracle: full density matrix, partial trace, Wootters concurrence.
enum class Engine { closed_form, numeric, oracle };

Engine parse_engine(std::string_view name);
std::string_view to_string(Engine e);

enum class Measure { concurrence, linear_entropy };
enum class Sense { maximize, minimize };

Measure parse_measure(std::string_view name);
Sense parse_sense(std::string_view name);

struct SweepConfig {
  int n_sites = 5;
  double exchange = 1.0;
  double delta_min = 0.0;
  double delta_max = 6.0;
  double delta_step = 0.05;
  std::vector<double> deltas;  // overrides the range when non-empty
  std::vector<double> temperatures{0.0, 0.5, 1.0, 1.5, 2.0};
  Engine engine = Engine::closed_form;
  int bond = 0;  // oracle pair is (bond, bond + 1)
  std::string output;

  /// Throws std::invalid_argument on a malformed or unsupported configuration.
  void validate() const;
  std::vector<double> delta_grid() const;
};

struct SweepRow {
  int n_sites = 0;
  double exchange = 1.0;
  double anisotropy = 0.0;
  double temperature = 0.0;
  double ln_z = 0.0;  // at T = 0: ln of the ground-level degeneracy
  double energy = 0.0;
  double gzz = 0.0;
  double concurrence = 0.0;
  double linear_entropy = 0.0;
  Engine engine = Engine::closed_form;
};

/// Throws std::invalid_argument for unsupported (engine, N, T) combinations.
SweepRow evaluate_point(int n_sites, double exchange, double delta, double temperature,
                        Engine engine, int bond = 0);

/// Rows ordered by (T, Delta) in the order given by the config.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "n,j,delta,t,ln_z,u,gzz,concurrence,linear_entropy,engine";

/// 17 significant digits.
std::string format_real(double x);
void write_csv(std::ostream& out, std::span<const SweepRow> rows);

using ScalarFunction = std::function<double(double)>;

ScalarFunction measure_function(int n_sites, double exchange, double temperature, Measure m,
                                Engine engine);

struct ExtremumResult {
  double location = 0.0;
  double value = 0.0;
  bool at_boundary = false;
  /// Grid neighbours around the best scan point; golden-section runs inside.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double scan_location = 0.0;
  double scan_value = 0.0;
};

inline constexpr double kScanStep = 0.01;
inline constexpr double kLocateTol = 1e-4;

/// Grid pre-scan at `scan_step`, then golden-section refinement inside the
/// bracket around the best grid point. A best point on the interval edge is
/// reported with at_boundary set and no refinement.
ExtremumResult find_extremum(const ScalarFunction& f, double lo, double hi, Sense sense,
                             double scan_step = kScanStep, double tol = kLocateTol);

struct ThresholdResult {
  std::optional<double> threshold;
  std::string reason;  // filled when no threshold is reported
};

/// Smallest Delta in [lo, hi] where f turns positive: grid scan for the first
/// positive point, then bisection to `tol`. No threshold when f > 0 already at
/// lo or f never turns positive.
ThresholdResult find_threshold(const ScalarFunction& f, double lo, double hi,
                               double scan_step = kScanStep, double tol = kLocateTol);

}  // namespace xxz
