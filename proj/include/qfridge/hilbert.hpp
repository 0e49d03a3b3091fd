// qfridge/hilbert.hpp — basis conventions, thermal states, partial trace, Hermitian utilities.
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

namespace qfridge {

using cxd = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat8c = Eigen::Matrix<cxd, 8, 8>;
using Vec8d = Eigen::Matrix<double, 8, 1>;

// Qubit ordering is C, R, H with C the most significant bit.
enum class QubitLabel { C = 0, R = 1, H = 2 };

constexpr std::array<QubitLabel, 3> all_qubits{QubitLabel::C, QubitLabel::R,
                                               QubitLabel::H};

// Bit of qubit i in the 0-based basis index k (k = 4c + 2r + h).
inline int bit_of(int k, QubitLabel i) { return (k >> (2 - static_cast<int>(i))) & 1; }
inline int flip_bit(int k, QubitLabel i) { return k ^ (1 << (2 - static_cast<int>(i))); }

// 1-based basis index: index = 4c + 2r + h + 1, so |010> is 3 and |101> is 6.
struct BasisIndex {
  int index;  // 1..8
  int c, r, h;

  static BasisIndex from_bits(int c, int r, int h);
  static BasisIndex from_index(int index);
};

// Single-qubit thermal state: ground population r = 1/(exp(-E/T)+1) > 1/2.
struct ThermalQubit {
  double r;
  double E;
  double T;
};

ThermalQubit thermal_qubit(double E, double T);

// All machine parameters; E_R = E_C + E_H is enforced at construction.
struct MachineSpec {
  double E_C, E_H, E_R;
  double T_C, T_R, T_H;
  double p_C, p_R, p_H;
  double g;

  MachineSpec(double E_C, double E_H, double T_C, double T_R, double T_H,
              double p_C, double p_R, double p_H, double g);

  double E(QubitLabel i) const;
  double T(QubitLabel i) const;
  double p(QubitLabel i) const;
  double p_sum() const { return p_C + p_R + p_H; }
  ThermalQubit thermal(QubitLabel i) const { return thermal_qubit(E(i), T(i)); }
};

// Diagonal of tau_C (x) tau_R (x) tau_H in basis order.
Vec8d product_thermal_diag(const MachineSpec& spec);

// tau = tau_C (x) tau_R (x) tau_H as a density matrix.
Mat8c product_thermal(const MachineSpec& spec);

// Partial trace over the two qubits other than i.
Mat2c reduce_to_qubit(const Mat8c& rho, QubitLabel i);

// Eigenvalues of a Hermitian matrix, ascending. Throws on non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& M);

// Density-matrix invariants: Hermitian (1e-12), unit trace (1e-10),
// eigenvalues >= -1e-10. Throws std::invalid_argument describing the failure.
void check_density(const Mat8c& rho);

}  // namespace qfridge
