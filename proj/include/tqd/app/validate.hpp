#pragma once

// Self-check suite behind `tqd validate`: numerical counterdiabatic engine
// against the closed forms, finite-difference convergence, propagation
// fidelity, and SIMD kernel agreement.

#include <string>
#include <vector>

namespace tqd::app {

enum class Fault {
  none,
  lz_cd_sign_flip,  // negates the closed-form σy coefficient before comparison
};

struct ValidationOptions {
  double fd_step = 1e-6;  // fraction of τ
  Fault fault = Fault::none;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double achieved = 0.0;
  double required = 0.0;
  std::string relation = "<=";  // how achieved must compare with required
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

ValidationReport run_validation(const ValidationOptions& opts = {});
std::string format_validation(const ValidationReport& r);

}  // namespace tqd::app
