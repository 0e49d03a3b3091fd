// analysis.cpp — trajectory observables, transient-minimum search, decay-rate
// fitting, and parameter sweeps.
#include "qfridge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace qfridge {

namespace {

// Run `body(k)` for k in [0, n); OpenMP-parallel when `parallel` is set.
// The first exception thrown by any iteration is rethrown after the loop.
template <class F>
void parallel_for_index(long long n, bool parallel, F&& body) {
#ifdef _OPENMP
  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static) if (parallel)
  for (long long k = 0; k < n; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  (void)parallel;
  for (long long k = 0; k < n; ++k) body(k);
#endif
}

// Ground-state population of qubit i. |111> (k=7) has no ground bits, so only
// the explicit coordinates contribute; clamped against integrator roundoff.
double ground_population(const Vec9d& v, QubitLabel i) {
  double r = 0.0;
  for (int k = 0; k < 7; ++k)
    if (bit_of(k, i) == 0) r += v[k];
  return std::clamp(r, 0.0, 1.0);
}

double cold_temperature(const MachineSpec& spec, const Vec9d& v) {
  return effective_temperature_from_r(ground_population(v, QubitLabel::C),
                                      spec.E_C)
      .value;
}

ObservableRecord make_record(double t, const Vec9d& v, const MachineSpec& spec,
                             const Mat8c& rho_inf, bool have_steady) {
  ObservableRecord rec = evaluate_observables(spec, t, v, rho_inf);
  if (!have_steady) rec.D = std::numeric_limits<double>::quiet_NaN();
  return rec;
}

MachineSpec with_parameter(const MachineSpec& base, const std::string& name,
                           double value) {
  double E_C = base.E_C, E_H = base.E_H;
  double T_C = base.T_C, T_R = base.T_R, T_H = base.T_H;
  double p_C = base.p_C, p_R = base.p_R, p_H = base.p_H;
  double g = base.g;
  if (name == "g")
    g = value;
  else if (name == "p_C")
    p_C = value;
  else if (name == "p_R")
    p_R = value;
  else if (name == "p_H")
    p_H = value;
  else if (name == "T_H")
    T_H = value;
  else if (name == "E_H")
    E_H = value;
  else if (name == "T_C")
    T_C = value;
  else if (name == "T_R")
    T_R = value;
  else
    throw std::invalid_argument(
        "sweep: unknown parameter '" + name +
        "'; expected one of g, p_C, p_R, p_H, T_H, E_H, T_C, T_R");
  return MachineSpec(E_C, E_H, T_C, T_R, T_H, p_C, p_R, p_H, g);
}

void require_sweep_parameter(const MachineSpec& base, const std::string& name) {
  (void)with_parameter(base, name, base.g);  // throws on unknown name
}

SweepRow compute_row(const MachineSpec& base, const std::string& parameter,
                     double value, double t_max) {
  SweepRow row{};
  row.value = value;
  row.ok = false;
  try {
    const MachineSpec spec = with_parameter(base, parameter, value);
    const ReducedSystem sys = build_reduced_system(spec);
    const Vec9d v_inf = steady_state(sys);
    row.steady_T_c = cold_temperature(spec, v_inf);
    const SpectrumClassification cl = classify(eigendecompose(sys));
    row.decay_rate = cl.decay_rate;
    row.damping_rate = cl.damping_rate;
    const MinTemperature mn = find_min_temperature(spec, t_max);
    row.min_T_c = mn.T_star.value;
    row.t_star = mn.t_star;
    row.W_max_R_CH = max_entanglement(spec, Partition::R_CH);
    row.W_max_genuine = max_entanglement(spec, Partition::genuine);
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

// Deterministic ascending order with non-finite values last.
void sort_values(std::vector<double>& values) {
  std::sort(values.begin(), values.end(), [](double a, double b) {
    if (std::isnan(a)) return false;
    if (std::isnan(b)) return true;
    return a < b;
  });
}

}  // namespace

ObservableRecord evaluate_observables(const MachineSpec& spec, double t,
                                      const Vec9d& v,
                                      const Mat8c& rho_reference) {
  const Mat8c rho = embed(v);
  ObservableRecord rec{};
  rec.t = t;
  rec.D = trace_distance(rho, rho_reference);
  rec.T_c = effective_temperature_from_r(ground_population(v, QubitLabel::C),
                                         spec.E_C)
                .value;
  rec.T_r = effective_temperature_from_r(ground_population(v, QubitLabel::R),
                                         spec.E_R)
                .value;
  rec.T_h = effective_temperature_from_r(ground_population(v, QubitLabel::H),
                                         spec.E_H)
                .value;
  rec.W_R_CH = witness(rho, Partition::R_CH).value;
  rec.W_genuine = witness(rho, Partition::genuine).value;
  double sum = 0.0;
  for (int k = 0; k < 7; ++k) {
    rec.populations[k] = v[k];
    sum += v[k];
  }
  rec.populations[7] = 1.0 - sum;
  rec.im_rho36 = v[8];
  return rec;
}

TimeSeries run_timeseries(const MachineSpec& spec, double t_final,
                          int n_samples, SolverChoice solver, bool parallel) {
  if (!(t_final > 0.0) || !std::isfinite(t_final))
    throw std::invalid_argument(
        "run_timeseries: t_final must be positive and finite");
  if (n_samples < 2)
    throw std::invalid_argument("run_timeseries: n_samples must be at least 2");

  TimeSeries series;
  series.times.resize(n_samples);
  for (int k = 0; k < n_samples; ++k)
    series.times[k] = t_final * static_cast<double>(k) / (n_samples - 1);

  const ReducedSystem sys = build_reduced_system(spec);
  const Vec9d v0 = reduced_thermal(spec);
  const bool dissipative = spec.p_sum() > 0.0;

  series.steady.setZero();
  bool have_steady = false;
  if (dissipative) {
    series.steady = steady_state(sys);
    have_steady = true;
  }
  series.spectrum = eigendecompose(sys);
  series.classification = classify(series.spectrum);

  bool use_spectral = solver == SolverChoice::spectral ||
                      (solver == SolverChoice::automatic && dissipative);
  if (use_spectral && !have_steady) {
    series.steady = steady_state(sys);  // no steady state without dissipation
    have_steady = true;
  }
  if (use_spectral) {
    try {
      solve_coefficients(series.spectrum, v0, series.steady);
    } catch (const std::runtime_error&) {
      if (solver != SolverChoice::automatic) throw;
      use_spectral = false;
    }
  }

  std::vector<Vec9d> states(n_samples);
  if (use_spectral) {
    series.solver_used = "spectral";
    parallel_for_index(n_samples, parallel, [&](long long k) {
      states[k] = evolve_spectral(series.spectrum, series.steady,
                                  series.times[k]);
    });
  } else {
    series.solver_used = "integrator";
    states = evolve_rk4(spec, sys, v0, series.times);
  }

  const Mat8c rho_inf = have_steady ? embed(series.steady) : Mat8c::Zero();
  series.records.resize(n_samples);
  parallel_for_index(n_samples, parallel, [&](long long k) {
    series.records[k] =
        make_record(series.times[k], states[k], spec, rho_inf, have_steady);
  });
  return series;
}

MinTemperature find_min_temperature(const MachineSpec& spec, double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument(
        "find_min_temperature: t_max must be positive and finite");

  const double P = spec.p_sum();
  double pitch = std::numeric_limits<double>::infinity();
  if (spec.g > 0.0) pitch = std::min(pitch, M_PI / (20.0 * spec.g));
  if (P > 0.0) pitch = std::min(pitch, 1.0 / P);

  long long n = 2001;
  if (std::isfinite(pitch))
    n = std::max(n, static_cast<long long>(std::ceil(t_max / pitch)) + 1);
  n = std::min(n, 4'000'001LL);  // pitch cap; golden refinement still runs

  const ReducedSystem sys = build_reduced_system(spec);
  const Vec9d v0 = reduced_thermal(spec);

  bool use_spectral = P > 0.0;
  Vec9d v_inf = Vec9d::Zero();
  Spectrum sp{};
  if (use_spectral) {
    try {
      v_inf = steady_state(sys);
      sp = eigendecompose(sys);
      solve_coefficients(sp, v0, v_inf);
    } catch (const std::runtime_error&) {
      use_spectral = false;  // fall back to direct integration probes
    }
  }

  auto state_at = [&](double t) -> Vec9d {
    if (t <= 0.0) return v0;
    if (use_spectral) return evolve_spectral(sp, v_inf, t);
    return evolve_rk4(spec, sys, v0, {0.0, t}).back();
  };
  auto temperature_at = [&](double t) { return cold_temperature(spec, state_at(t)); };

  std::vector<double> ts(n), Ts(n);
  for (long long k = 0; k < n; ++k)
    ts[k] = t_max * static_cast<double>(k) / static_cast<double>(n - 1);
  if (use_spectral) {
    parallel_for_index(n, true, [&](long long k) { Ts[k] = temperature_at(ts[k]); });
  } else {
    const std::vector<Vec9d> states = evolve_rk4(spec, sys, v0, ts);
    for (long long k = 0; k < n; ++k) Ts[k] = cold_temperature(spec, states[k]);
  }

  long long imin = 0;
  for (long long k = 1; k < n; ++k)
    if (Ts[k] < Ts[imin]) imin = k;

  double t_best = ts[imin], T_best = Ts[imin];
  double a = ts[imin > 0 ? imin - 1 : 0];
  double b = ts[imin + 1 < n ? imin + 1 : n - 1];
  if (b > a) {
    const double gr = 0.6180339887498949;  // golden ratio conjugate
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = temperature_at(x1), f2 = temperature_at(x2);
    for (int it = 0; it < 300 && b - a > 1e-4 * std::max(b, 1e-300); ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = temperature_at(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = temperature_at(x2);
      }
    }
    const double tm = 0.5 * (a + b), Tm = temperature_at(tm);
    if (Tm < T_best) { t_best = tm; T_best = Tm; }
    if (f1 < T_best) { t_best = x1; T_best = f1; }
    if (f2 < T_best) { t_best = x2; T_best = f2; }
  }

  MinTemperature out;
  out.t_star = t_best;
  out.T_star = effective_temperature_from_r(
      ground_population(state_at(t_best), QubitLabel::C), spec.E_C);
  out.interior = imin > 0 && imin + 1 < n;
  return out;
}

double fit_decay_rate(const TimeSeries& series, double t1, double t2) {
  if (!std::isfinite(t1) || !std::isfinite(t2) || !(t2 > t1) || t1 < 0.0)
    throw std::invalid_argument("fit_decay_rate: need 0 <= t1 < t2");
  const SpectrumClassification& cl = series.classification;
  if (cl.has_complex_pair && cl.damping_rate > 0.0 &&
      t1 < 5.0 / cl.damping_rate)
    throw std::invalid_argument(
        "fit_decay_rate: window overlaps the coherent transient; need t1 >= "
        "5/damping_rate = " +
        std::to_string(5.0 / cl.damping_rate));

  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    const double t = series.times[k];
    if (t < t1 || t > t2) continue;
    const double D = series.records[k].D;
    if (!(D >= 1e-12)) continue;  // discards underflowed and undefined samples
    xs.push_back(t);
    ys.push_back(std::log(D));
  }
  if (xs.size() < 2)
    throw std::runtime_error(
        "fit_decay_rate: trace distance underflowed below 1e-12 in the "
        "window; nothing to fit");

  const std::size_t m = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  return -sxy / sxx;
}

SweepResult sweep(const MachineSpec& base, const std::string& parameter,
                  std::vector<double> values, double t_max, bool parallel) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("sweep: t_max must be positive and finite");
  require_sweep_parameter(base, parameter);
  sort_values(values);

  SweepResult result;
  result.parameter = parameter;
  result.t_max = t_max;
  result.rows.resize(values.size());
  parallel_for_index(static_cast<long long>(values.size()), parallel,
                     [&](long long k) {
                       result.rows[k] =
                           compute_row(base, parameter, values[k], t_max);
                     });
  return result;
}

SweepResult sweep_serial(const MachineSpec& base, const std::string& parameter,
                         std::vector<double> values, double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("sweep: t_max must be positive and finite");
  require_sweep_parameter(base, parameter);
  sort_values(values);

  SweepResult result;
  result.parameter = parameter;
  result.t_max = t_max;
  result.rows.reserve(values.size());
  for (double value : values)
    result.rows.push_back(compute_row(base, parameter, value, t_max));
  return result;
}

}  // namespace qfridge
