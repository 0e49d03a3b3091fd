// qfridge/run_config.hpp — run description loaded from flat key=value config
// files; strict parsing, full machine revalidation.
#pragma once

#include <string>
#include <vector>

#include "qfridge/analysis.hpp"
#include "qfridge/hilbert.hpp"

namespace qfridge {

struct RunConfig {
  // Machine parameters (E_R = E_C + E_H is implied).
  double E_C = 0.0, E_H = 0.0;
  double T_C = 0.0, T_R = 0.0, T_H = 0.0;
  double p_C = 0.0, p_R = 0.0, p_H = 0.0;
  double g = 0.0;

  std::string kind;  // timeseries | sweep | spectrum | summary

  // Grid settings.
  double t_final = 0.0;  // timeseries span (required for kind=timeseries)
  int n_samples = 2000;  // timeseries samples
  double t_max = 500.0;  // minimum-search budget for sweeps

  // Sweep settings.
  std::string sweep_parameter;
  std::vector<double> sweep_values;
  double alt_p_C = 0.0;  // optional second sweep series with these couplings
  double alt_p_H = 0.0;  // replacing p_C/p_H (0 = no alternate series)

  // Output settings.
  std::string out_dir = ".";
  std::string out_prefix = "qfridge";
  std::string solver = "auto";  // auto | spectral | integrator

  // Cross-field validation; throws std::invalid_argument on any violation,
  // including every MachineSpec invariant.
  void validate() const;

  MachineSpec machine() const;
  MachineSpec machine_alt() const;  // alternate sweep series couplings
  bool has_alt() const { return alt_p_C > 0.0 || alt_p_H > 0.0; }
  SolverChoice solver_choice() const;
};

// Parse `key = value` lines (# comments, blank lines allowed). Keys are
// exactly the RunConfig field names; unknown or duplicate keys are fatal.
RunConfig parse_config_text(const std::string& text);

// Read and parse a config file; throws std::runtime_error when unreadable.
RunConfig load_config_file(const std::string& path);

}  // namespace qfridge
