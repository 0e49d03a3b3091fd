// qfridge/observables.hpp — effective temperatures, trace distance,
// entanglement witnesses, virtual temperature, and closed-form transient bounds.
#pragma once

#include "qfridge/hilbert.hpp"

namespace qfridge {

enum class TempRegime { positive, infinite, negative };

struct Temperature {
  double value;
  TempRegime regime;
};

// Invert r = 1/(exp(-E/T)+1) for a diagonal single-qubit state.
// Population inversion (r < 1/2) reports a flagged negative temperature.
Temperature effective_temperature(const Mat2c& reduced, double E);
Temperature effective_temperature_from_r(double r, double E);

// D(rho, sigma) = (1/2) || rho - sigma ||_1.
double trace_distance(const Mat8c& rho1, const Mat8c& rho2);

enum class Partition { R_CH, C_RH, CR_H, genuine };

struct WitnessValue {
  double value;
  Partition partition;
  unsigned S_mask;  // bit j-1 set <=> j in S, j in {1,2,3}
};

// W_S(rho) = 2 (|rho_36| - sum_{j in S} sqrt(rho_jj rho_kk)) with the pair map
// (1-based) 1 -> (1,8) [R|CH], 2 -> (2,7) [C|RH], 3 -> (4,5) [CR|H].
// Accepted S: the three singletons and {1,2,3} (genuine tripartite).
WitnessValue witness(const Mat8c& rho, unsigned S_mask);
WitnessValue witness(const Mat8c& rho, Partition partition);

struct VirtualTemperature {
  Temperature T_V;  // E_C / (E_R/T_R - E_H/T_H)
  bool cooling;     // 0 <= T_V < T_C
};

VirtualTemperature virtual_temperature(const MachineSpec& spec);

// Closed-form maximum of the witness over dissipation-free evolution from the
// product thermal state (factor 2 for R|CH, factor 6 for genuine), evaluated
// in log-space so large E/T do not overflow.
double max_entanglement(const MachineSpec& spec, Partition kind);

struct SwapMinimum {
  Temperature T_min;  // cold-qubit temperature after a complete population swap
  double t_opt;       // pi / (2 g)
  double r_c;         // swapped cold-qubit ground population
};

// Minimal cold-qubit temperature reachable by unitary evolution from the
// product thermal state: rho_33 <- max(tau_33, tau_66) at t = pi/2g.
SwapMinimum min_unitary_temperature(const MachineSpec& spec);

}  // namespace qfridge
