// qfridge/integrate.hpp — fixed-step RK4 integration of the master equation in
// reduced (9-dim) and full (64-dim) form; the independent oracle for `spectral`.
#pragma once

#include "qfridge/liouvillian.hpp"

#include <vector>

namespace qfridge {

struct IntegratorConfig {
  double dt = 0.0;  // <= the step bound below; 0 selects the default step
  long long max_steps = 200'000'000;
};

// Hard upper bound from the fastest time scales:
//   0.05 * min(1/(2g+eps), 1/(sum p + eps)[, 1/E_max in full space]).
double step_bound(const MachineSpec& spec, bool full_space);

// Default step: the tighter of the bound above and an accuracy-targeted step
// (accumulated fourth-order error <= ~1e-9 over min(t_span, 3/sum p)).
double default_step(const MachineSpec& spec, double t_span, bool full_space);

// Integrate dv/dt = A v + u through the strictly increasing sample times
// (starting from t = 0), landing on each sample exactly by sub-stepping.
std::vector<Vec9d> evolve_rk4(const MachineSpec& spec, const ReducedSystem& sys,
                              const Vec9d& v0, const std::vector<double>& times,
                              const IntegratorConfig& config = {});

// Same for the full 64-dim vectorized form, d vec(rho)/dt = L vec(rho).
std::vector<Eigen::VectorXcd> evolve_rk4_full(const MachineSpec& spec,
                                              const Eigen::MatrixXcd& L,
                                              const Eigen::VectorXcd& rho0,
                                              const std::vector<double>& times,
                                              const IntegratorConfig& config = {});

}  // namespace qfridge
