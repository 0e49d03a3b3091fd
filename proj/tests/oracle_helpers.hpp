// tests/oracle_helpers.hpp — independent reference computations for the test
// suites: bisection eigenvalues, closed-form two-level dynamics, a block
// trace-distance formula, seeded random states, and shared machine builders.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qfridge/hilbert.hpp"
#include "qfridge/liouvillian.hpp"

namespace oracle {

using qfridge::cxd;
using qfridge::Mat8c;
using qfridge::Vec9d;

// ---------------------------------------------------------------------------
// Machines shared across suites (energies E_C=1, E_H=100; T_C=T_R=1, T_H=100
// unless stated otherwise).

// Bath couplings p_C = p_H = 1e-5, p_R = 1e-3.
inline qfridge::MachineSpec base_machine(double g) {
  return {1.0, 100.0, 1.0, 1.0, 100.0, 1e-5, 1e-3, 1e-5, g};
}

// Symmetric stronger couplings p_C = p_H = 1e-4.
inline qfridge::MachineSpec symmetric_machine(double g) {
  return {1.0, 100.0, 1.0, 1.0, 100.0, 1e-4, 1e-3, 1e-4, g};
}

// Asymmetric couplings p_C = 1e-4, p_H = 1e-5.
inline qfridge::MachineSpec asymmetric_machine(double g) {
  return {1.0, 100.0, 1.0, 1.0, 100.0, 1e-4, 1e-3, 1e-5, g};
}

// Equal weak couplings p_C = p_H = 2e-5.
inline qfridge::MachineSpec equal_coupling_machine(double g) {
  return {1.0, 100.0, 1.0, 1.0, 100.0, 2e-5, 1e-3, 2e-5, g};
}

// Moderate energies and temperatures: every thermal population stays far from
// 0 and 1, so no double-precision underflow anywhere.
inline qfridge::MachineSpec moderate_machine(double g) {
  return {1.0, 2.0, 1.0, 1.5, 3.0, 1e-3, 2e-3, 5e-4, g};
}

inline qfridge::MachineSpec with_rates(const qfridge::MachineSpec& m,
                                       double p_C, double p_R, double p_H,
                                       double g) {
  return {m.E_C, m.E_H, m.T_C, m.T_R, m.T_H, p_C, p_R, p_H, g};
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues by inertia bisection: Sylvester's law applied to the
// pivots of an LDL^H-style elimination of M - sigma I. Independent of any
// library eigensolver.

inline int count_eigenvalues_below(Eigen::MatrixXcd M, double sigma) {
  const int n = static_cast<int>(M.rows());
  for (int k = 0; k < n; ++k) M(k, k) -= sigma;
  int negatives = 0;
  for (int k = 0; k < n; ++k) {
    double pivot = M(k, k).real();
    if (std::abs(pivot) < 1e-300) pivot = 1e-300;  // nudge exact singularities
    if (pivot < 0.0) ++negatives;
    for (int i = k + 1; i < n; ++i) {
      const cxd f = M(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) M(i, j) -= f * M(k, j);
    }
  }
  return negatives;
}

inline std::vector<double> bisect_hermitian_eigenvalues(const Eigen::MatrixXcd& M) {
  const int n = static_cast<int>(M.rows());
  double lo = 0.0, hi = 0.0;
  for (int k = 0; k < n; ++k) {  // Gershgorin enclosure
    const double c = M(k, k).real();
    double radius = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != k) radius += std::abs(M(k, j));
    lo = std::min(lo, c - radius);
    hi = std::max(hi, c + radius);
  }
  const double pad = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;
  std::vector<double> out(n);
  for (int k = 1; k <= n; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + std::abs(a) + std::abs(b));
         ++it) {
      const double mid = 0.5 * (a + b);
      if (count_eigenvalues_below(M, mid) >= k)
        b = mid;
      else
        a = mid;
    }
    out[k - 1] = 0.5 * (a + b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form dissipation-free dynamics of the degenerate pair from a diagonal
// start with rho_33 = a, rho_66 = b: a two-level Rabi swap with period pi/g.

struct RabiState {
  double rho33, rho66, re36, im36;
};

inline RabiState rabi(double a, double b, double g, double t) {
  const double c = std::cos(g * t), s = std::sin(g * t);
  return {a * c * c + b * s * s, a * s * s + b * c * c, 0.0,
          0.5 * (a - b) * std::sin(2.0 * g * t)};
}

// ---------------------------------------------------------------------------
// Trace distance of two states that differ only on the diagonal and the (3,6)
// pair: six 1x1 blocks plus one 2x2 Hermitian block, all by hand.

inline double block_trace_distance(const Mat8c& r1, const Mat8c& r2) {
  double sum = 0.0;
  for (int k : {0, 1, 3, 4, 6, 7}) sum += std::abs((r1(k, k) - r2(k, k)).real());
  const double x = (r1(2, 2) - r2(2, 2)).real();
  const double y = (r1(5, 5) - r2(5, 5)).real();
  const cxd z = r1(2, 5) - r2(2, 5);
  const double mean = 0.5 * (x + y);
  const double root = std::sqrt(0.25 * (x - y) * (x - y) + std::norm(z));
  sum += std::abs(mean + root) + std::abs(mean - root);
  return 0.5 * sum;
}

// ---------------------------------------------------------------------------
// Seeded random state generators.

inline Eigen::MatrixXcd random_hermitian(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = cxd(u(rng), u(rng));
  return 0.5 * (G + G.adjoint()).eval();
}

inline Mat8c random_density(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd G(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) G(i, j) = cxd(u(rng), u(rng));
  Eigen::MatrixXcd R = G * G.adjoint();
  R /= R.trace().real();
  return R;
}

inline Mat8c random_hermitian_unit_trace(unsigned seed) {
  Eigen::MatrixXcd M = random_hermitian(8, seed);
  M -= ((M.trace().real() - 1.0) / 8.0) * Eigen::MatrixXcd::Identity(8, 8);
  return M;
}

// Random diagonal density matrix with full support.
inline Mat8c random_diagonal_density(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Eigen::Matrix<double, 8, 1> d;
  for (int k = 0; k < 8; ++k) d[k] = u(rng);
  d /= d.sum();
  Mat8c rho = Mat8c::Zero();
  rho.diagonal() = d.cast<cxd>();
  return rho;
}

// Random physically valid reduced state: full-support populations plus a
// (3,6) coherence at half the positivity bound.
inline Vec9d random_reduced_state(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Eigen::Matrix<double, 8, 1> d;
  for (int k = 0; k < 8; ++k) d[k] = u(rng);
  d /= d.sum();
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double theta = angle(rng);
  const double mag = 0.5 * std::sqrt(d[2] * d[5]);
  Vec9d v;
  for (int k = 0; k < 7; ++k) v[k] = d[k];
  v[7] = mag * std::cos(theta);
  v[8] = mag * std::sin(theta);
  return v;
}

}  // namespace oracle
