// run_config.cpp — strict flat key=value config parsing and validation.
#include "qfridge/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qfridge {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size())
      throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key +
                                "' has a malformed number '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long x = std::stol(value, &used);
    if (used != value.size())
      throw std::invalid_argument("trailing characters");
    return static_cast<int>(x);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key +
                                "' has a malformed integer '" + value + "'");
  }
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw std::invalid_argument("config: key '" + key +
                                  "' has an empty list entry");
    out.push_back(parse_double(key, item));
  }
  if (out.empty())
    throw std::invalid_argument("config: key '" + key + "' has an empty list");
  return out;
}

}  // namespace

void RunConfig::validate() const {
  (void)machine();  // every MachineSpec invariant
  if (has_alt()) (void)machine_alt();

  if (kind != "timeseries" && kind != "sweep" && kind != "spectrum" &&
      kind != "summary")
    throw std::invalid_argument(
        "config: kind must be one of timeseries, sweep, spectrum, summary "
        "(got '" +
        kind + "')");
  if (solver != "auto" && solver != "spectral" && solver != "integrator")
    throw std::invalid_argument(
        "config: solver must be one of auto, spectral, integrator (got '" +
        solver + "')");

  if (kind == "timeseries") {
    if (!(t_final > 0.0) || !std::isfinite(t_final))
      throw std::invalid_argument(
          "config: timeseries runs need t_final > 0");
    if (n_samples < 2)
      throw std::invalid_argument("config: n_samples must be at least 2");
  }
  if (kind == "sweep") {
    if (sweep_parameter.empty())
      throw std::invalid_argument("config: sweep runs need sweep_parameter");
    if (sweep_values.empty())
      throw std::invalid_argument("config: sweep runs need sweep_values");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
      throw std::invalid_argument("config: sweep runs need t_max > 0");
  }
  if (out_prefix.empty())
    throw std::invalid_argument("config: out_prefix must not be empty");
}

MachineSpec RunConfig::machine() const {
  return MachineSpec(E_C, E_H, T_C, T_R, T_H, p_C, p_R, p_H, g);
}

MachineSpec RunConfig::machine_alt() const {
  return MachineSpec(E_C, E_H, T_C, T_R, T_H, alt_p_C, p_R, alt_p_H, g);
}

SolverChoice RunConfig::solver_choice() const {
  if (solver == "spectral") return SolverChoice::spectral;
  if (solver == "integrator") return SolverChoice::integrator;
  return SolverChoice::automatic;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  std::set<std::string> seen;
  std::set<std::string> machine_keys;
  bool have_kind = false;

  std::stringstream ss(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not of the form key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " has an empty key or value");
    if (!seen.insert(key).second)
      throw std::invalid_argument("config: duplicate key '" + key + "'");

    if (key == "E_C")
      config.E_C = parse_double(key, value);
    else if (key == "E_H")
      config.E_H = parse_double(key, value);
    else if (key == "T_C")
      config.T_C = parse_double(key, value);
    else if (key == "T_R")
      config.T_R = parse_double(key, value);
    else if (key == "T_H")
      config.T_H = parse_double(key, value);
    else if (key == "p_C")
      config.p_C = parse_double(key, value);
    else if (key == "p_R")
      config.p_R = parse_double(key, value);
    else if (key == "p_H")
      config.p_H = parse_double(key, value);
    else if (key == "g")
      config.g = parse_double(key, value);
    else if (key == "kind")
      config.kind = value;
    else if (key == "t_final")
      config.t_final = parse_double(key, value);
    else if (key == "n_samples")
      config.n_samples = parse_int(key, value);
    else if (key == "t_max")
      config.t_max = parse_double(key, value);
    else if (key == "sweep_parameter")
      config.sweep_parameter = value;
    else if (key == "sweep_values")
      config.sweep_values = parse_double_list(key, value);
    else if (key == "alt_p_C")
      config.alt_p_C = parse_double(key, value);
    else if (key == "alt_p_H")
      config.alt_p_H = parse_double(key, value);
    else if (key == "out_dir")
      config.out_dir = value;
    else if (key == "out_prefix")
      config.out_prefix = value;
    else if (key == "solver")
      config.solver = value;
    else
      throw std::invalid_argument("config: unknown key '" + key + "' on line " +
                                  std::to_string(lineno));

    static const std::set<std::string> kMachine{
        "E_C", "E_H", "T_C", "T_R", "T_H", "p_C", "p_R", "p_H", "g"};
    if (kMachine.count(key)) machine_keys.insert(key);
    if (key == "kind") have_kind = true;
  }

  if (machine_keys.size() != 9) {
    std::string missing;
    for (const char* k :
         {"E_C", "E_H", "T_C", "T_R", "T_H", "p_C", "p_R", "p_H", "g"})
      if (!machine_keys.count(k)) missing += std::string(missing.empty() ? "" : ", ") + k;
    throw std::invalid_argument("config: missing machine keys: " + missing);
  }
  if (!have_kind) throw std::invalid_argument("config: missing key 'kind'");

  config.validate();
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("config: cannot read file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace qfridge
