#pragma once

#include <string>
#include <vector>

namespace xxz {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  /// Test fixture: evaluate the closed-form five-site spectrum at -Delta so
  /// the closed-form/numeric comparison must fail.
  bool inject_delta_sign_fault = false;
  /// Largest ring used by the generic invariants.
  int max_sites = 8;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

VerifyReport run_verification(const VerifyOptions& opts = {});

/// {"passed": bool, "checks": [{"check", "status", "max_error", "tolerance", "detail"}]}
std::string report_json(const VerifyReport& report);

}  // namespace xxz
