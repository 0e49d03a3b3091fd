// qfridge/liouvillian.hpp — Hamiltonian, master-equation generator, full 64-dim
// superoperator, and the reduced 9-variable affine system dv/dt = A v + u.
#pragma once

#include "qfridge/hilbert.hpp"

namespace qfridge {

using Mat9d = Eigen::Matrix<double, 9, 9>;
using Vec9d = Eigen::Matrix<double, 9, 1>;

// H = H0 + H_int: diagonal energies plus g on the degenerate (3,6) pair.
Mat8c build_hamiltonian(const MachineSpec& spec);

// Right-hand side of the master equation:
//   d rho/dt = -i [H, rho] + sum_i p_i (tau_i (x) Tr_i(rho) - rho).
Mat8c apply_generator(const MachineSpec& spec, const Mat8c& rho);

// 64x64 matrix L with L vec(rho) = vec(apply_generator(rho)),
// column-stacking convention.
Eigen::MatrixXcd build_full_superoperator(const MachineSpec& spec);

// Reduced coordinates: v = (rho_11..rho_77, Re rho_36, Im rho_36),
// rho_88 = 1 - sum_{k<=7} rho_kk eliminated via the trace.
struct ReducedSystem {
  Mat9d A;
  Vec9d u;
};

ReducedSystem build_reduced_system(const MachineSpec& spec);

// Reduced <-> full state maps. extract throws if rho carries coherence
// outside the (3,6)/(6,3) pair (magnitude > 1e-10).
Mat8c embed(const Vec9d& v);
Vec9d extract(const Mat8c& rho);

// Reduced coordinates of the product thermal state (diagonal, no coherence).
Vec9d reduced_thermal(const MachineSpec& spec);

}  // namespace qfridge
