#pragma once

// Run configuration shared by the CLI subcommands. The on-disk form is a flat
// key/value map ("oscillator.omega0 = 1"), either as text lines or as a JSON
// object; JSON report output embeds the same map under "config".

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tqd/landau_zener.hpp"
#include "tqd/oscillator.hpp"
#include "tqd/quadrature.hpp"

namespace tqd::app {

enum class ModelKind { oscillator, landau_zener, generic_file };
enum class OutputFormat { csv, json };

std::string_view to_string(ModelKind m);
std::string_view to_string(OutputFormat f);

struct RunConfig {
  ModelKind model = ModelKind::oscillator;
  OscillatorParams oscillator{};
  LZParams lz{};
  std::string generic_file;
  std::size_t generic_level = 0;
  double generic_tau = 0.0;  // 0 keeps the file's τ
  std::size_t grid_points = 1001;
  QuadratureOptions quad{};
  double fd_step = 1e-6;  // fraction of τ
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: stdout

  double tau() const;
  void set_tau(double tau);
  // Throws ValidationError naming the first bad field.
  void validate() const;
};

using FlatConfig = std::map<std::string, std::string>;

// Every key accepted by config_from_flat, in documentation order.
const std::vector<std::string>& config_keys();

// Applies keys on top of `base`. Unknown keys and unparsable values throw
// ValidationError naming the key. ramp.* keys address the selected model's
// control ramp (ω for the oscillator, g for Landau–Zener).
RunConfig config_from_flat(const FlatConfig& flat, RunConfig base = {});

// Full key set, numbers printed with 17 significant digits so that
// config_from_flat(config_to_flat(c)) reproduces c exactly.
FlatConfig config_to_flat(const RunConfig& c);

// "key = value" lines ('#' comments) or a JSON object; a JSON object with a
// "config" member (report output) contributes that member.
FlatConfig parse_config_text(std::string_view text);
FlatConfig load_config_file(const std::string& path);

std::string format_double(double v, int significant_digits);

}  // namespace tqd::app
