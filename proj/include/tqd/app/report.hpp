#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "tqd/app/config.hpp"
#include "tqd/qsl.hpp"

namespace tqd::app {

std::unique_ptr<Protocol> make_protocol(const RunConfig& c);

// Label for the energy units of ε_t and v_QSL: "rescaled" or "bare" for
// Landau–Zener, "natural" otherwise. ∂ₜC is frame independent.
std::string energy_frame(const RunConfig& c);

ProtocolReport run_report(const RunConfig& c);

// Columns: t,t_over_tau,control,epsilon,cost_rate,angle,vqsl (12 significant
// digits, "inf" for unbounded speed).
std::string samples_csv(const ProtocolReport& r);
std::string summary_csv(const RunConfig& c, const ProtocolReport& r);
std::string report_json(const RunConfig& c, const ProtocolReport& r);

// Summary file that accompanies a CSV report at `path`: "run.csv" → "run.summary.csv".
std::string summary_path_for(const std::string& path);

// Writes the report to c.output_path (CSV: samples + summary file; JSON: one
// file) or to `out` when no path is set. Throws std::ios_base::failure on I/O errors.
ProtocolReport cmd_report(const RunConfig& c, std::ostream& out);

struct SweepRow {
  double tau = 0.0;
  double tau_qsl = 0.0;
  double total_cost = 0.0;
  double E_tau = 0.0;
  double final_angle = 0.0;
};

// One row per τ, evaluated concurrently, returned in input order. taus must be
// non-empty, positive and strictly ascending.
std::vector<SweepRow> run_qsl_sweep(const RunConfig& c, const std::vector<double>& taus);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const RunConfig& c, const std::vector<SweepRow>& rows);

std::vector<SweepRow> cmd_qsl_sweep(const RunConfig& c, const std::vector<double>& taus,
                                    std::ostream& out);

}  // namespace tqd::app
