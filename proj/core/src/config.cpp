#include "xtalk/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace xtalk {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void check_keys(const json& obj, const std::string& scope,
                const std::set<std::string>& allowed) {
  if (!obj.is_object())
    throw ValidationError("config: " + scope + " must be a JSON object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key))
      throw ValidationError("config: unknown key " +
                            (scope.empty() ? key : scope + "." + key));
}

template <typename T>
void read_field(const json& obj, const std::string& scope,
                const std::string& key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config: field " + scope + "." + key +
                          " has the wrong type");
  }
}

void read_pulse(const json& obj, const std::string& scope, PulseSpec& p) {
  check_keys(obj, scope,
             {"shape", "amplitude", "detuning", "chirp_rate", "drag_alpha",
              "sigma"});
  std::string shape = pulse_shape_name(p.shape);
  read_field(obj, scope, "shape", shape);
  p.shape = parse_pulse_shape(shape);
  read_field(obj, scope, "amplitude", p.amplitude);
  read_field(obj, scope, "detuning", p.detuning);
  read_field(obj, scope, "chirp_rate", p.chirp_rate);
  read_field(obj, scope, "drag_alpha", p.drag_alpha);
  read_field(obj, scope, "sigma", p.sigma);
}

ordered_json pulse_json(const PulseSpec& p) {
  return ordered_json{{"shape", pulse_shape_name(p.shape)},
                      {"amplitude", p.amplitude},
                      {"detuning", p.detuning},
                      {"chirp_rate", p.chirp_rate},
                      {"drag_alpha", p.drag_alpha},
                      {"sigma", p.sigma}};
}

}  // namespace

RunConfig default_run_config() { return RunConfig{}; }

RunConfig parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: JSON parse error: ") +
                          e.what());
  }

  RunConfig c;
  check_keys(doc, "",
             {"coupling", "pulse_q0", "pulse_q1", "sim", "protocol",
              "defense", "output"});

  if (doc.contains("coupling")) {
    const json& b = doc["coupling"];
    check_keys(b, "coupling", {"type_01", "type_12", "j01", "j12"});
    std::string t01 = link_label(c.attack.coupling, 0);
    std::string t12 = link_label(c.attack.coupling, 1);
    read_field(b, "coupling", "type_01", t01);
    read_field(b, "coupling", "type_12", t12);
    set_link(c.attack.coupling, 0, t01);
    set_link(c.attack.coupling, 1, t12);
    read_field(b, "coupling", "j01", c.attack.coupling.j01);
    read_field(b, "coupling", "j12", c.attack.coupling.j12);
  }
  if (doc.contains("pulse_q0"))
    read_pulse(doc["pulse_q0"], "pulse_q0", c.attack.pulse_q0);
  if (doc.contains("pulse_q1"))
    read_pulse(doc["pulse_q1"], "pulse_q1", c.attack.pulse_q1);
  if (doc.contains("sim")) {
    const json& b = doc["sim"];
    check_keys(b, "sim", {"time_steps", "substeps", "aux_state"});
    read_field(b, "sim", "time_steps", c.attack.time_steps);
    read_field(b, "sim", "substeps", c.attack.substeps_per_step);
    std::string aux = aux_state_name(c.attack.aux_state);
    read_field(b, "sim", "aux_state", aux);
    c.attack.aux_state = parse_aux_state(aux);
  }
  if (doc.contains("protocol")) {
    const json& b = doc["protocol"];
    check_keys(b, "protocol",
               {"lambda_grid", "sqqnn_degree", "sqqnn_test_fraction",
                "sqqnn_seed", "sqqnn_epsilon"});
    read_field(b, "protocol", "lambda_grid", c.lambda_grid);
    read_field(b, "protocol", "sqqnn_degree", c.sqqnn_degree);
    read_field(b, "protocol", "sqqnn_test_fraction", c.sqqnn_test_fraction);
    read_field(b, "protocol", "sqqnn_seed", c.sqqnn_seed);
    read_field(b, "protocol", "sqqnn_epsilon", c.sqqnn_epsilon);
  }
  if (doc.contains("defense")) {
    const json& b = doc["defense"];
    check_keys(b, "defense", {"shots", "threshold", "seed"});
    read_field(b, "defense", "shots", c.defense_shots);
    read_field(b, "defense", "threshold", c.defense_threshold);
    read_field(b, "defense", "seed", c.defense_seed);
  }
  if (doc.contains("output")) {
    const json& b = doc["output"];
    check_keys(b, "output", {"directory", "emit_svg"});
    read_field(b, "output", "directory", c.out_dir);
    read_field(b, "output", "emit_svg", c.emit_svg);
  }

  validate_run_config(c);
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

void validate_run_config(const RunConfig& c) {
  validate_config(c.attack);
  parse_degree_grid(c.lambda_grid);
  if (c.sqqnn_degree < 1)
    throw ValidationError("config: protocol.sqqnn_degree must be >= 1");
  if (!(c.sqqnn_test_fraction >= 0.0 && c.sqqnn_test_fraction < 1.0))
    throw ValidationError(
        "config: protocol.sqqnn_test_fraction outside [0, 1)");
  if (!(c.sqqnn_epsilon > 0.0 && c.sqqnn_epsilon <= 1e-8))
    throw ValidationError("config: protocol.sqqnn_epsilon outside (0, 1e-8]");
  if (c.defense_shots < 100)
    throw ValidationError("config: defense.shots must be >= 100");
  if (!(c.defense_threshold > 0.0))
    throw ValidationError("config: defense.threshold must be > 0");
  if (c.out_dir.empty())
    throw ValidationError("config: output.directory must be non-empty");
}

std::string resolved_config_json(const RunConfig& c) {
  ordered_json doc;
  doc["coupling"] = ordered_json{{"type_01", link_label(c.attack.coupling, 0)},
                                 {"type_12", link_label(c.attack.coupling, 1)},
                                 {"j01", c.attack.coupling.j01},
                                 {"j12", c.attack.coupling.j12}};
  doc["pulse_q0"] = pulse_json(c.attack.pulse_q0);
  doc["pulse_q1"] = pulse_json(c.attack.pulse_q1);
  doc["sim"] = ordered_json{{"time_steps", c.attack.time_steps},
                            {"substeps", c.attack.substeps_per_step},
                            {"aux_state", aux_state_name(c.attack.aux_state)}};
  doc["protocol"] = ordered_json{{"lambda_grid", c.lambda_grid},
                                 {"sqqnn_degree", c.sqqnn_degree},
                                 {"sqqnn_test_fraction", c.sqqnn_test_fraction},
                                 {"sqqnn_seed", c.sqqnn_seed},
                                 {"sqqnn_epsilon", c.sqqnn_epsilon}};
  doc["defense"] = ordered_json{{"shots", c.defense_shots},
                                {"threshold", c.defense_threshold},
                                {"seed", c.defense_seed}};
  doc["output"] =
      ordered_json{{"directory", c.out_dir}, {"emit_svg", c.emit_svg}};
  return doc.dump();
}

std::vector<double> parse_degree_grid(const std::string& grid) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(grid);
  if (!(in >> start >> sep1 >> stop >> sep2 >> step) || sep1 != ':' ||
      sep2 != ':' || !(in >> std::ws).eof())
    throw ValidationError("config: bad grid \"" + grid +
                          "\" (expected start:stop:step)");
  if (!(step > 0.0) || stop < start)
    throw ValidationError("config: bad grid \"" + grid +
                          "\" (need step > 0 and stop >= start)");
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double v = start + step * k;
    if (v > stop + 1e-9) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace xtalk
