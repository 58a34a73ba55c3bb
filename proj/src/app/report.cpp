#include "tqd/app/report.hpp"

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "tqd/app/generic_model.hpp"
#include "tqd/cd_generic.hpp"
#include "tqd/errors.hpp"
#include "tqd/landau_zener.hpp"
#include "tqd/oscillator.hpp"

namespace tqd::app {

using nlohmann::ordered_json;

namespace {

std::string g12(double v) { return format_double(v, 12); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw std::ios_base::failure("write to '" + path + "' failed");
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : config_to_flat(c)) j[k] = v;
  return j;
}

}  // namespace

std::unique_ptr<Protocol> make_protocol(const RunConfig& c) {
  c.validate();
  switch (c.model) {
    case ModelKind::oscillator:
      return std::make_unique<OscillatorProtocol>(c.oscillator);
    case ModelKind::landau_zener:
      return std::make_unique<LandauZenerProtocol>(c.lz);
    case ModelKind::generic_file: {
      const GenericModel m = load_generic_model(c.generic_file, c.generic_tau);
      if (c.generic_level >= m.dim) {
        throw ValidationError("generic.level: must be below the matrix dimension " +
                              std::to_string(m.dim));
      }
      return std::make_unique<NumericProtocol>(m.schedule(), c.generic_level,
                                               FdOptions{c.fd_step * m.tau, 1}, m.control());
    }
  }
  throw ValidationError("model: unsupported");
}

std::string energy_frame(const RunConfig& c) {
  if (c.model == ModelKind::landau_zener) return c.lz.rescaled ? "rescaled" : "bare";
  return "natural";
}

ProtocolReport run_report(const RunConfig& c) {
  const auto p = make_protocol(c);
  return build_report(*p, c.grid_points, c.quad);
}

std::string samples_csv(const ProtocolReport& r) {
  std::string out = "t,t_over_tau,control,epsilon,cost_rate,angle,vqsl\n";
  for (const SpeedSample& s : r.samples) {
    out += g12(s.t);
    out += ',' + g12(s.t / r.tau);
    out += ',' + g12(s.control);
    out += ',' + g12(s.epsilon);
    out += ',' + g12(s.cost_rate);
    out += ',' + g12(s.angle);
    out += ',' + (s.speed.is_unbounded() ? std::string("inf") : g12(s.speed.value()));
    out += '\n';
  }
  return out;
}

std::string summary_csv(const RunConfig& c, const ProtocolReport& r) {
  std::string out = "model,frame,tau,total_cost,E_tau,tau_qsl\n";
  out += std::string(to_string(c.model)) + ',' + energy_frame(c) + ',' + g12(r.tau) + ',' +
         g12(r.total_cost) + ',' + g12(r.E_tau) + ',' + g12(r.tau_qsl) + '\n';
  return out;
}

std::string report_json(const RunConfig& c, const ProtocolReport& r) {
  ordered_json j;
  j["config"] = config_json(c);
  j["summary"] = {{"model", std::string(to_string(c.model))},
                  {"frame", energy_frame(c)},
                  {"tau", r.tau},
                  {"total_cost", r.total_cost},
                  {"E_tau", r.E_tau},
                  {"tau_qsl", r.tau_qsl}};
  ordered_json rows = ordered_json::array();
  for (const SpeedSample& s : r.samples) {
    ordered_json row;
    row["t"] = s.t;
    row["t_over_tau"] = s.t / r.tau;
    row["control"] = s.control;
    row["epsilon"] = s.epsilon;
    row["cost_rate"] = s.cost_rate;
    row["angle"] = s.angle;
    if (s.speed.is_unbounded()) {
      row["vqsl"] = {{"unbounded", true}};
    } else {
      row["vqsl"] = s.speed.value();
    }
    rows.push_back(std::move(row));
  }
  j["samples"] = std::move(rows);
  return j.dump(2) + '\n';
}

std::string summary_path_for(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + ".summary.csv";
  }
  return path.substr(0, dot) + ".summary" + path.substr(dot);
}

ProtocolReport cmd_report(const RunConfig& c, std::ostream& out) {
  ProtocolReport r = run_report(c);
  if (c.format == OutputFormat::json) {
    const std::string text = report_json(c, r);
    if (c.output_path.empty()) {
      out << text;
    } else {
      write_file(c.output_path, text);
    }
  } else if (c.output_path.empty()) {
    out << samples_csv(r) << '\n' << summary_csv(c, r);
  } else {
    write_file(c.output_path, samples_csv(r));
    write_file(summary_path_for(c.output_path), summary_csv(c, r));
  }
  return r;
}

std::vector<SweepRow> run_qsl_sweep(const RunConfig& c, const std::vector<double>& taus) {
  if (taus.empty()) throw ValidationError("taus: list must not be empty");
  for (std::size_t k = 0; k < taus.size(); ++k) {
    if (!(taus[k] > 0.0)) throw ValidationError("taus: values must be > 0");
    if (k > 0 && !(taus[k] > taus[k - 1])) {
      throw ValidationError("taus: values must be strictly ascending");
    }
  }
  std::vector<std::future<SweepRow>> jobs;
  jobs.reserve(taus.size());
  for (double tau : taus) {
    RunConfig ck = c;
    ck.set_tau(tau);
    ck.validate();
    jobs.push_back(std::async(std::launch::async, [ck, tau] {
      const auto p = make_protocol(ck);
      SweepRow row;
      row.tau = tau;
      row.total_cost = total_cost(*p, ck.quad);
      row.E_tau = time_averaged_energy(*p, ck.quad);
      row.tau_qsl = qsl_time(*p, ck.quad);
      row.final_angle = p->angle(p->duration());
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(jobs.size());
  for (auto& f : jobs) rows.push_back(f.get());
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "tau,tau_qsl,total_cost,E_tau,final_angle\n";
  for (const SweepRow& r : rows) {
    out += g12(r.tau) + ',' + g12(r.tau_qsl) + ',' + g12(r.total_cost) + ',' + g12(r.E_tau) +
           ',' + g12(r.final_angle) + '\n';
  }
  return out;
}

std::string sweep_json(const RunConfig& c, const std::vector<SweepRow>& rows) {
  ordered_json j;
  j["config"] = config_json(c);
  j["frame"] = energy_frame(c);
  ordered_json arr = ordered_json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"tau", r.tau},
                   {"tau_qsl", r.tau_qsl},
                   {"total_cost", r.total_cost},
                   {"E_tau", r.E_tau},
                   {"final_angle", r.final_angle}});
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + '\n';
}

std::vector<SweepRow> cmd_qsl_sweep(const RunConfig& c, const std::vector<double>& taus,
                                    std::ostream& out) {
  std::vector<SweepRow> rows = run_qsl_sweep(c, taus);
  const std::string text = c.format == OutputFormat::json ? sweep_json(c, rows) : sweep_csv(rows);
  if (c.output_path.empty()) {
    out << text;
  } else {
    write_file(c.output_path, text);
  }
  return rows;
}

}  // namespace tqd::app
