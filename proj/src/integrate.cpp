// qfridge/integrate.cpp
#include "qfridge/integrate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qfridge {

namespace {
constexpr double kEps = 1e-30;

void check_times(const std::vector<double>& times) {
  double prev = 0.0;
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < prev)
      throw std::invalid_argument("evolve_rk4: sample times must be >= 0 and increasing");
    prev = times[i];
  }
}

double resolve_step(const MachineSpec& spec, const IntegratorConfig& config,
                    double t_span, bool full_space) {
  const double bound = step_bound(spec, full_space);
  double dt = config.dt > 0.0 ? config.dt : default_step(spec, t_span, full_space);
  if (dt > bound) {
    std::ostringstream os;
    os << "evolve_rk4: step " << dt << " exceeds the bound " << bound;
    throw std::invalid_argument(os.str());
  }
  return dt;
}

long long substeps(double span, double dt) {
  return span <= 0.0 ? 0 : static_cast<long long>(std::ceil(span / dt - 1e-12));
}

// One RK4 step for the affine reduced system.
inline void rk4_step(const ReducedSystem& sys, Vec9d& v, double h) {
  const Vec9d k1 = sys.A * v + sys.u;
  const Vec9d k2 = sys.A * (v + 0.5 * h * k1) + sys.u;
  const Vec9d k3 = sys.A * (v + 0.5 * h * k2) + sys.u;
  const Vec9d k4 = sys.A * (v + h * k3) + sys.u;
  v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

inline void rk4_step_full(const Eigen::MatrixXcd& L, Eigen::VectorXcd& x, double h) {
  const Eigen::VectorXcd k1 = L * x;
  const Eigen::VectorXcd k2 = L * (x + 0.5 * h * k1);
  const Eigen::VectorXcd k3 = L * (x + 0.5 * h * k2);
  const Eigen::VectorXcd k4 = L * (x + h * k3);
  x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}
}  // namespace

double step_bound(const MachineSpec& spec, bool full_space) {
  double b = 0.05 * std::min(1.0 / (2.0 * spec.g + kEps), 1.0 / (spec.p_sum() + kEps));
  if (full_space) {
    const double e_max = spec.E_C + spec.E_R + spec.E_H;
    b = std::min(b, 0.05 / e_max);
  }
  return b;
}

double default_step(const MachineSpec& spec, double t_span, bool full_space) {
  // Trajectories from diagonal states only excite frequencies up to ~2g and
  // decay rates up to ~sum p, so target omega^5 dt^4 / 120 * T_eff <= 1e-9.
  const double omega = 2.0 * spec.g + spec.p_sum();
  const double P = spec.p_sum();
  const double t_eff = std::min(t_span, P > 0.0 ? 3.0 / P : t_span);
  double dt = step_bound(spec, full_space);
  if (omega > 0.0 && t_eff > 0.0) {
    const double acc = std::pow(1.2e-7 / (std::pow(omega, 5) * t_eff), 0.25);
    dt = std::min(dt, acc);
  }
  if (t_span > 0.0) dt = std::min(dt, t_span);
  return dt;
}

std::vector<Vec9d> evolve_rk4(const MachineSpec& spec, const ReducedSystem& sys,
                              const Vec9d& v0, const std::vector<double>& times,
                              const IntegratorConfig& config) {
  check_times(times);
  const double t_span = times.empty() ? 0.0 : times.back();
  const double dt = resolve_step(spec, config, t_span, false);

  long long total = 0;
  double prev = 0.0;
  for (double t : times) {
    total += substeps(t - prev, dt);
    prev = t;
  }
  if (total > config.max_steps) {
    std::ostringstream os;
    os << "evolve_rk4: " << total << " steps exceed max_steps " << config.max_steps;
    throw std::invalid_argument(os.str());
  }

  std::vector<Vec9d> out;
  out.reserve(times.size());
  Vec9d v = v0;
  double t = 0.0;
  long long done = 0;
  for (double target : times) {
    const long long n = substeps(target - t, dt);
    const double h = n > 0 ? (target - t) / static_cast<double>(n) : 0.0;
    for (long long s = 0; s < n; ++s) {
      rk4_step(sys, v, h);
      ++done;
      if (!v.allFinite()) {
        std::ostringstream os;
        os << "evolve_rk4: divergence (non-finite state) at step " << done;
        throw std::runtime_error(os.str());
      }
    }
    t = target;
    out.push_back(v);
  }
  return out;
}

std::vector<Eigen::VectorXcd> evolve_rk4_full(const MachineSpec& spec,
                                              const Eigen::MatrixXcd& L,
                                              const Eigen::VectorXcd& rho0,
                                              const std::vector<double>& times,
                                              const IntegratorConfig& config) {
  if (L.rows() != 64 || L.cols() != 64 || rho0.size() != 64)
    throw std::invalid_argument("evolve_rk4_full: expected 64-dim operator and state");
  check_times(times);
  const double t_span = times.empty() ? 0.0 : times.back();
  const double dt = resolve_step(spec, config, t_span, true);

  long long total = 0;
  double prev = 0.0;
  for (double t : times) {
    total += substeps(t - prev, dt);
    prev = t;
  }
  if (total > config.max_steps) {
    std::ostringstream os;
    os << "evolve_rk4_full: " << total << " steps exceed max_steps " << config.max_steps;
    throw std::invalid_argument(os.str());
  }

  std::vector<Eigen::VectorXcd> out;
  out.reserve(times.size());
  Eigen::VectorXcd x = rho0;
  double t = 0.0;
  long long done = 0;
  for (double target : times) {
    const long long n = substeps(target - t, dt);
    const double h = n > 0 ? (target - t) / static_cast<double>(n) : 0.0;
    for (long long s = 0; s < n; ++s) {
      rk4_step_full(L, x, h);
      ++done;
      if (!x.allFinite()) {
        std::ostringstream os;
        os << "evolve_rk4_full: divergence (non-finite state) at step " << done;
        throw std::runtime_error(os.str());
      }
    }
    t = target;
    out.push_back(x);
  }
  return out;
}

}  // namespace qfridge
