// presets.cpp — canned run configurations for the standard scenarios.
#include "qfridge/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace qfridge {

namespace {

RunConfig base_machine() {
  RunConfig c;
  c.E_C = 1.0;
  c.E_H = 100.0;
  c.T_C = 1.0;
  c.T_R = 1.0;
  c.T_H = 100.0;
  c.p_C = 1e-5;
  c.p_R = 1e-3;
  c.p_H = 1e-5;
  return c;
}

RunConfig timeseries_preset(double g, double t_final, const std::string& name) {
  RunConfig c = base_machine();
  c.kind = "timeseries";
  c.g = g;
  c.t_final = t_final;
  c.n_samples = 2000;
  c.out_prefix = name;
  return c;
}

// n logarithmically spaced points with the endpoints exact.
std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> values(n);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (int k = 0; k < n; ++k)
    values[k] = std::pow(10.0, llo + (lhi - llo) * k / (n - 1));
  values.front() = lo;
  values.back() = hi;
  return values;
}

RunConfig g_sweep_preset(double lo, double hi, int n, double t_max,
                         const std::string& name) {
  RunConfig c = base_machine();
  c.kind = "sweep";
  c.g = lo;  // template value; overridden per row
  c.sweep_parameter = "g";
  c.sweep_values = log_grid(lo, hi, n);
  c.t_max = t_max;
  c.out_prefix = name;
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig2f", "fig2g",
          "fig2h", "fig3a", "fig3b", "fig4a", "fig4b", "fig4c", "fig4d",
          "fig5"};
}

RunConfig preset(const std::string& name) {
  // Fig. 2: one trajectory per coupling strength; the eight panels plot
  // different columns of the same two time series.
  if (name == "fig2a" || name == "fig2c" || name == "fig2e" || name == "fig2g")
    return timeseries_preset(1e-2, 2000.0, name);
  if (name == "fig2b" || name == "fig2d" || name == "fig2f" || name == "fig2h")
    return timeseries_preset(1e-4, 40000.0, name);

  if (name == "fig3a") {
    RunConfig c = g_sweep_preset(1e-6, 1e-1, 61, 500.0, name);
    c.p_C = 1e-4;
    c.p_H = 1e-4;
    return c;
  }
  if (name == "fig3b") {
    RunConfig c = g_sweep_preset(1e-6, 1e-1, 61, 500.0, name);
    c.p_C = 1e-4;
    c.p_H = 1e-5;
    c.alt_p_C = 2e-5;  // equal-couplings variant as a second series
    c.alt_p_H = 2e-5;
    return c;
  }

  if (name == "fig4a") return g_sweep_preset(1e-4, 1e-1, 41, 500.0, name);
  if (name == "fig4b") {
    RunConfig c = g_sweep_preset(1e-4, 1e-1, 41, 500.0, name);
    c.p_C = 1e-4;
    return c;
  }
  if (name == "fig4c") return timeseries_preset(5e-3, 500.0, name);
  if (name == "fig4d") {
    RunConfig c = timeseries_preset(5e-3, 500.0, name);
    c.p_C = 1e-4;
    return c;
  }

  if (name == "fig5") return timeseries_preset(1e-4, 400000.0, name);

  std::string valid;
  for (const std::string& n : preset_names())
    valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown preset '" + name + "'; valid names: " +
                              valid);
}

}  // namespace qfridge
