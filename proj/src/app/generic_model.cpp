#include "tqd/app/generic_model.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tqd/errors.hpp"

namespace tqd::app {

using nlohmann::json;

namespace {

cplx parse_entry(const json& e, const std::string& where) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw ValidationError(where + ": entry must be a number or [re, im]");
}

double number_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ValidationError(where + "." + key + ": expected a number");
  }
  return obj.at(key).get<double>();
}

}  // namespace

HamiltonianSchedule GenericModel::schedule() const {
  HamiltonianSchedule s;
  s.dim = dim;
  s.tau = tau;
  // copies keep the schedule self-contained
  s.evaluate = [mats = matrices, rs = ramps, d = dim](double t) {
    HermitianOperator h = HermitianOperator::zero(d);
    for (std::size_t k = 0; k < mats.size(); ++k) h += mats[k].scaled(rs[k].value(t));
    return h;
  };
  return s;
}

std::function<double(double)> GenericModel::control() const {
  return [r = ramps.front()](double t) { return r.value(t); };
}

GenericModel parse_generic_model(std::string_view json_text, double tau_override) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("generic.file: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("generic.file: expected a JSON object");

  GenericModel m;
  m.tau = tau_override > 0.0 ? tau_override : number_at(j, "tau", "generic.file");
  if (!(m.tau > 0.0)) throw ValidationError("generic.file.tau: must be > 0");

  if (!j.contains("terms") || !j.at("terms").is_array() || j.at("terms").empty()) {
    throw ValidationError("generic.file.terms: expected a non-empty array");
  }
  std::size_t k = 0;
  for (const json& term : j.at("terms")) {
    const std::string where = "generic.file.terms[" + std::to_string(k++) + "]";
    if (!term.is_object() || !term.contains("matrix") || !term.contains("ramp")) {
      throw ValidationError(where + ": expected {\"matrix\": ..., \"ramp\": ...}");
    }
    const json& rows = term.at("matrix");
    if (!rows.is_array() || rows.empty()) throw ValidationError(where + ".matrix: expected rows");
    const std::size_t n = rows.size();
    if (m.dim == 0) m.dim = n;
    if (n != m.dim) throw ValidationError(where + ".matrix: dimension differs from first term");
    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw ValidationError(where + ".matrix: expected a square matrix");
      }
      for (const json& e : row) entries.push_back(parse_entry(e, where + ".matrix"));
    }
    try {
      m.matrices.push_back(HermitianOperator::from_row_major(n, std::move(entries)));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ".matrix: " + e.what());
    }
    const json& ramp = term.at("ramp");
    if (!ramp.is_object()) throw ValidationError(where + ".ramp: expected an object");
    if (ramp.contains("kind")) ramp_kind_from_string(ramp.at("kind").get<std::string>());
    m.ramps.push_back(Ramp::linear(number_at(ramp, "start", where + ".ramp"),
                                   number_at(ramp, "delta", where + ".ramp"), m.tau));
  }
  return m;
}

GenericModel load_generic_model(const std::string& path, double tau_override) {
  std::ifstream in(path);
  if (!in) throw ValidationError("generic.file: cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_generic_model(text.str(), tau_override);
}

}  // namespace tqd::app
