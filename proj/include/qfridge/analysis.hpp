// qfridge/analysis.hpp — trajectory observables, minimum-temperature search,
// decay-rate fitting, and parameter sweeps (OpenMP-parallel with a serial
// reference path).
#pragma once

#include <array>
#include <string>
#include <vector>

#include "qfridge/integrate.hpp"
#include "qfridge/observables.hpp"
#include "qfridge/spectral.hpp"

namespace qfridge {

enum class SolverChoice { automatic, spectral, integrator };

// Everything recorded at one sample time of a trajectory.
struct ObservableRecord {
  double t;
  double D;        // trace distance to the steady state
  double T_c;      // effective temperatures of the three qubits
  double T_r;
  double T_h;
  double W_R_CH;   // entanglement witness, R|CH cut
  double W_genuine;
  std::array<double, 8> populations;
  double im_rho36;  // coherence in the degenerate pair
};

struct TimeSeries {
  std::vector<double> times;
  std::vector<ObservableRecord> records;
  std::string solver_used;  // "spectral" or "integrator"
  Vec9d steady;             // reduced steady-state coordinates
  Spectrum spectrum;
  SpectrumClassification classification;
};

// Evaluate every per-sample observable of a reduced state; D is measured
// against rho_reference.
ObservableRecord evaluate_observables(const MachineSpec& spec, double t,
                                      const Vec9d& v,
                                      const Mat8c& rho_reference);

// Evolve the product-thermal initial state on a uniform grid of n_samples
// points over [0, t_final] and evaluate all observables. The automatic solver
// picks the spectral path whenever the generator is dissipative (sum p > 0)
// and falls back to RK4 otherwise. Observable evaluation is embarrassingly
// parallel across samples; `parallel` switches the OpenMP path on.
TimeSeries run_timeseries(const MachineSpec& spec, double t_final,
                          int n_samples, SolverChoice solver = SolverChoice::automatic,
                          bool parallel = true);

struct MinTemperature {
  double t_star;       // argmin of T_c over [0, t_max]
  Temperature T_star;  // value there
  bool interior;       // true when the minimum is not pinned to a boundary
};

// Coarse grid (at least 2000 points, pitch no wider than the fastest scale
// min{pi/20g, 1/sum p}) followed by golden-section refinement to relative
// time tolerance 1e-4.
MinTemperature find_min_temperature(const MachineSpec& spec, double t_max);

// Least-squares slope of log D(t) over samples with t in [t1, t2]; returns the
// positive decay rate (minus the slope). Requires the window to start past the
// coherent transient, t1 >= 5/damping_rate, when a complex pair is present
// (std::invalid_argument otherwise). Samples with D < 1e-12 are discarded;
// fewer than two survivors raise std::runtime_error (underflow, nothing to
// fit).
double fit_decay_rate(const TimeSeries& series, double t1, double t2);

struct SweepRow {
  double value;       // swept parameter value
  bool ok;            // false when this row failed; `error` says why
  std::string error;
  double steady_T_c;
  double min_T_c;     // minimum of T_c over [0, t_max]
  double t_star;
  double decay_rate;    // -Re lambda_max
  double damping_rate;  // -Re lambda_cp (0 when overdamped)
  double W_max_R_CH;    // peak witness values along the trajectory scales
  double W_max_genuine;
};

struct SweepResult {
  std::string parameter;
  double t_max;
  std::vector<SweepRow> rows;  // sorted by value
};

// One-parameter sweep. `parameter` is one of g, p_C, p_R, p_H, T_H, E_H, T_C,
// T_R; each row rebuilds the machine from scratch (no warm starts), computes
// steady/minimum temperatures, spectral rates and witness maxima, and records
// failures per row instead of aborting the sweep. Rows are independent and
// distributed over OpenMP threads when `parallel` is set.
SweepResult sweep(const MachineSpec& base, const std::string& parameter,
                  std::vector<double> values, double t_max, bool parallel = true);

// Serial reference implementation with identical semantics, kept for testing
// and benchmarking against the parallel path.
SweepResult sweep_serial(const MachineSpec& base, const std::string& parameter,
                         std::vector<double> values, double t_max);

}  // namespace qfridge
