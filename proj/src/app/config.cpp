#include "tqd/app/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tqd/errors.hpp"

namespace tqd::app {

std::string_view to_string(ModelKind m) {
  switch (m) {
    case ModelKind::oscillator:
      return "oscillator";
    case ModelKind::landau_zener:
      return "landau-zener";
    case ModelKind::generic_file:
      return "generic-file";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string format_double(double v, int significant_digits) {
  if (v == 0.0) v = 0.0;  // no "-0"
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

double RunConfig::tau() const {
  switch (model) {
    case ModelKind::oscillator:
      return oscillator.tau;
    case ModelKind::landau_zener:
      return lz.tau;
    case ModelKind::generic_file:
      return generic_tau;
  }
  return 0.0;
}

void RunConfig::set_tau(double tau) {
  switch (model) {
    case ModelKind::oscillator:
      oscillator.tau = tau;
      break;
    case ModelKind::landau_zener:
      lz.tau = tau;
      break;
    case ModelKind::generic_file:
      generic_tau = tau;
      break;
  }
}

void RunConfig::validate() const {
  if (grid_points < 3) throw ValidationError("grid_points: must be >= 3");
  if (!(quad.abs_tol > 0.0)) throw ValidationError("quad.abs_tol: must be > 0");
  if (!(quad.rel_tol > 0.0)) throw ValidationError("quad.rel_tol: must be > 0");
  if (!(fd_step > 0.0 && fd_step < 0.25)) throw ValidationError("cd.fd_step: must be in (0, 0.25)");
  switch (model) {
    case ModelKind::oscillator:
      oscillator.validate();
      break;
    case ModelKind::landau_zener:
      lz.validate();
      break;
    case ModelKind::generic_file:
      if (generic_file.empty()) throw ValidationError("generic.file: required for generic-file model");
      if (generic_tau < 0.0) throw ValidationError("generic.tau: must be >= 0");
      break;
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "model",           "grid_points",        "output.format",   "output.path",
      "quad.abs_tol",    "quad.rel_tol",       "cd.fd_step",      "oscillator.omega0",
      "oscillator.omega_d", "oscillator.mass", "oscillator.tau",  "lz.delta",
      "lz.g0",           "lz.g_d",             "lz.tau",          "lz.rescaled",
      "generic.file",    "generic.level",      "generic.tau",     "ramp.kind",
      "ramp.start",      "ramp.delta",         "ramp.tau"};
  return keys;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ValidationError(key + ": expected a decimal number, got '" + text + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError(key + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ValidationError(key + ": expected true or false, got '" + text + "'");
}

ModelKind parse_model(const std::string& text) {
  if (text == "oscillator") return ModelKind::oscillator;
  if (text == "landau-zener" || text == "lz") return ModelKind::landau_zener;
  if (text == "generic-file") return ModelKind::generic_file;
  throw ValidationError("model: expected oscillator, landau-zener or generic-file, got '" + text +
                        "'");
}

void apply_ramp_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "ramp.kind") {
    ramp_kind_from_string(value);  // only linear is accepted
    return;
  }
  const double v = parse_real(key, value);
  auto set = [&](double& start, double& delta, double& tau) {
    if (key == "ramp.start") start = v;
    if (key == "ramp.delta") delta = v;
    if (key == "ramp.tau") tau = v;
  };
  switch (c.model) {
    case ModelKind::oscillator:
      set(c.oscillator.omega0, c.oscillator.omega_d, c.oscillator.tau);
      break;
    case ModelKind::landau_zener:
      set(c.lz.g0, c.lz.g_d, c.lz.tau);
      break;
    case ModelKind::generic_file:
      throw ValidationError(key + ": ramp keys do not apply to the generic-file model");
  }
}

}  // namespace

RunConfig config_from_flat(const FlatConfig& flat, RunConfig c) {
  if (auto it = flat.find("model"); it != flat.end()) c.model = parse_model(it->second);
  for (const auto& [key, value] : flat) {
    if (key == "model" || key.rfind("ramp.", 0) == 0) continue;
    if (key == "grid_points") {
      c.grid_points = parse_count(key, value);
    } else if (key == "output.format") {
      if (value == "csv") {
        c.format = OutputFormat::csv;
      } else if (value == "json") {
        c.format = OutputFormat::json;
      } else {
        throw ValidationError("output.format: expected csv or json, got '" + value + "'");
      }
    } else if (key == "output.path") {
      c.output_path = value;
    } else if (key == "quad.abs_tol") {
      c.quad.abs_tol = parse_real(key, value);
    } else if (key == "quad.rel_tol") {
      c.quad.rel_tol = parse_real(key, value);
    } else if (key == "cd.fd_step") {
      c.fd_step = parse_real(key, value);
    } else if (key == "oscillator.omega0") {
      c.oscillator.omega0 = parse_real(key, value);
    } else if (key == "oscillator.omega_d") {
      c.oscillator.omega_d = parse_real(key, value);
    } else if (key == "oscillator.mass") {
      c.oscillator.mass = parse_real(key, value);
    } else if (key == "oscillator.tau") {
      c.oscillator.tau = parse_real(key, value);
    } else if (key == "lz.delta") {
      c.lz.delta = parse_real(key, value);
    } else if (key == "lz.g0") {
      c.lz.g0 = parse_real(key, value);
    } else if (key == "lz.g_d") {
      c.lz.g_d = parse_real(key, value);
    } else if (key == "lz.tau") {
      c.lz.tau = parse_real(key, value);
    } else if (key == "lz.rescaled") {
      c.lz.rescaled = parse_bool(key, value);
    } else if (key == "generic.file") {
      c.generic_file = value;
    } else if (key == "generic.level") {
      c.generic_level = parse_count(key, value);
    } else if (key == "generic.tau") {
      c.generic_tau = parse_real(key, value);
    } else {
      throw ValidationError("unknown config key '" + key + "'");
    }
  }
  for (const auto& [key, value] : flat) {
    if (key.rfind("ramp.", 0) != 0) continue;
    if (key != "ramp.kind" && key != "ramp.start" && key != "ramp.delta" && key != "ramp.tau") {
      throw ValidationError("unknown config key '" + key + "'");
    }
    apply_ramp_key(c, key, value);
  }
  c.validate();
  return c;
}

FlatConfig config_to_flat(const RunConfig& c) {
  auto num = [](double v) { return format_double(v, 17); };
  FlatConfig f;
  f["model"] = std::string(to_string(c.model));
  f["grid_points"] = std::to_string(c.grid_points);
  f["output.format"] = std::string(to_string(c.format));
  f["output.path"] = c.output_path;
  f["quad.abs_tol"] = num(c.quad.abs_tol);
  f["quad.rel_tol"] = num(c.quad.rel_tol);
  f["cd.fd_step"] = num(c.fd_step);
  switch (c.model) {
    case ModelKind::oscillator:
      f["oscillator.omega0"] = num(c.oscillator.omega0);
      f["oscillator.omega_d"] = num(c.oscillator.omega_d);
      f["oscillator.mass"] = num(c.oscillator.mass);
      f["oscillator.tau"] = num(c.oscillator.tau);
      break;
    case ModelKind::landau_zener:
      f["lz.delta"] = num(c.lz.delta);
      f["lz.g0"] = num(c.lz.g0);
      f["lz.g_d"] = num(c.lz.g_d);
      f["lz.tau"] = num(c.lz.tau);
      f["lz.rescaled"] = c.lz.rescaled ? "true" : "false";
      break;
    case ModelKind::generic_file:
      f["generic.file"] = c.generic_file;
      f["generic.level"] = std::to_string(c.generic_level);
      f["generic.tau"] = num(c.generic_tau);
      break;
  }
  return f;
}

FlatConfig parse_config_text(std::string_view text) {
  FlatConfig flat;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("config: invalid JSON: ") + e.what());
    }
    const nlohmann::json& obj = j.contains("config") ? j.at("config") : j;
    if (!obj.is_object()) throw ValidationError("config: expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
      if (value.is_string()) {
        flat[key] = value.get<std::string>();
      } else if (value.is_boolean()) {
        flat[key] = value.get<bool>() ? "true" : "false";
      } else if (value.is_number_integer() || value.is_number_unsigned()) {
        flat[key] = value.dump();
      } else if (value.is_number()) {
        flat[key] = format_double(value.get<double>(), 17);
      } else {
        throw ValidationError(key + ": expected a scalar value");
      }
    }
    return flat;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    flat[trim(content.substr(0, eq))] = trim(content.substr(eq + 1));
  }
  return flat;
}

FlatConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace tqd::app
