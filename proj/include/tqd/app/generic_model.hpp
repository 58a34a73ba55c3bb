#pragma once

// File-defined model: H₀(t) = Σ_k λ_k(t)·M_k with linear ramps λ_k.
//
// {
//   "tau": 1.0,
//   "terms": [
//     {"matrix": [[0, 1], [1, 0]],               "ramp": {"start": 1,  "delta": 0}},
//     {"matrix": [[1, 0], [0, -1]],              "ramp": {"start": 20, "delta": -40}},
//     {"matrix": [[0, [0, -1]], [[0, 1], 0]],    "ramp": {"start": 0,  "delta": 0}}
//   ]
// }
//
// Entries are numbers or [re, im] pairs. The report's control column is the
// first term's ramp value.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tqd/cd_generic.hpp"
#include "tqd/schedules.hpp"

namespace tqd::app {

struct GenericModel {
  std::size_t dim = 0;
  double tau = 0.0;
  std::vector<HermitianOperator> matrices;
  std::vector<Ramp> ramps;

  HamiltonianSchedule schedule() const;
  std::function<double(double)> control() const;
};

// tau_override > 0 replaces the file's τ in every ramp.
GenericModel parse_generic_model(std::string_view json_text, double tau_override = 0.0);
GenericModel load_generic_model(const std::string& path, double tau_override = 0.0);

}  // namespace tqd::app
