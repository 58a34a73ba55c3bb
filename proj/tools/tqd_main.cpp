// tqd: speed limits and cost of counterdiabatic driving.
//
//   tqd report    [--config FILE] [--<key> VALUE ...]
//   tqd qsl-sweep --taus 0.5,1,2 [--config FILE] [--<key> VALUE ...]
//   tqd validate  [--fd-step F] [--inject lz-cd-sign]
//   tqd version
//
// Exit codes: 0 ok, 1 validation failure, 2 usage or I/O error, 3 numeric error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tqd/app/config.hpp"
#include "tqd/app/report.hpp"
#include "tqd/app/validate.hpp"
#include "tqd/errors.hpp"
#include "tqd/simd/kernels.hpp"

#ifndef TQD_VERSION
#define TQD_VERSION "0.0.0"
#endif

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kUsage = 2, kNumeric = 3 };

struct ConfigFlags {
  std::string config_file;
  std::map<std::string, std::string> values;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--config", flags.config_file, "Config file (key = value lines or JSON)");
  for (const std::string& key : tqd::app::config_keys()) {
    std::string names = "--" + key;
    if (key == "output.format") names += ",--format";
    if (key == "output.path") names += ",--output";
    cmd->add_option(names, flags.values[key], "config key " + key);
  }
}

tqd::app::RunConfig resolve(const CLI::App* cmd, const ConfigFlags& flags) {
  tqd::app::FlatConfig flat;
  if (!flags.config_file.empty()) flat = tqd::app::load_config_file(flags.config_file);
  for (const auto& [key, value] : flags.values) {
    if (cmd->get_option("--" + key)->count() > 0) flat[key] = value;
  }
  return tqd::app::config_from_flat(flat);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speed limits and cost of counterdiabatic driving"};
  app.require_subcommand(1);

  ConfigFlags report_flags;
  CLI::App* report = app.add_subcommand("report", "Per-time speed/cost dataset and summary");
  add_config_flags(report, report_flags);

  ConfigFlags sweep_flags;
  std::vector<double> taus;
  CLI::App* sweep = app.add_subcommand("qsl-sweep", "Minimal time and cost over a list of tau");
  add_config_flags(sweep, sweep_flags);
  sweep->add_option("--taus", taus, "Ascending protocol durations")->required()->delimiter(',');

  double fd_step = 1e-6;
  std::string inject;
  CLI::App* validate = app.add_subcommand("validate", "Numerical engine against closed forms");
  validate->add_option("--fd-step", fd_step, "Finite-difference step as a fraction of tau")
      ->check(CLI::PositiveNumber);
  validate->add_option("--inject", inject, "Fault injection for testing the suite")
      ->check(CLI::IsMember({"lz-cd-sign"}));

  app.add_subcommand("version", "Print version and SIMD selection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (report->parsed()) {
      tqd::app::cmd_report(resolve(report, report_flags), std::cout);
    } else if (sweep->parsed()) {
      tqd::app::cmd_qsl_sweep(resolve(sweep, sweep_flags), taus, std::cout);
    } else if (validate->parsed()) {
      tqd::app::ValidationOptions opts;
      opts.fd_step = fd_step;
      if (inject == "lz-cd-sign") opts.fault = tqd::app::Fault::lz_cd_sign_flip;
      const tqd::app::ValidationReport r = tqd::app::run_validation(opts);
      std::cout << tqd::app::format_validation(r);
      return r.passed() ? kOk : kValidationFailed;
    } else {
      std::cout << "tqd " << TQD_VERSION << " (simd: "
                << tqd::simd::to_string(tqd::simd::active_isa()) << ")\n";
    }
  } catch (const tqd::ValidationError& e) {
    std::cerr << "tqd: invalid configuration: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "tqd: I/O error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "tqd: numeric error: " << e.what() << '\n';
    return kNumeric;
  }
  std::cout.flush();
  return std::cout ? kOk : kUsage;
}
