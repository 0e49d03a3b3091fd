// qfridge/hilbert.cpp
#include "qfridge/hilbert.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qfridge {

BasisIndex BasisIndex::from_bits(int c, int r, int h) {
  if ((c | r | h) < 0 || c > 1 || r > 1 || h > 1)
    throw std::invalid_argument("BasisIndex: bits must be 0 or 1");
  return {4 * c + 2 * r + h + 1, c, r, h};
}

BasisIndex BasisIndex::from_index(int index) {
  if (index < 1 || index > 8)
    throw std::invalid_argument("BasisIndex: index must be in 1..8");
  const int k = index - 1;
  return {index, (k >> 2) & 1, (k >> 1) & 1, k & 1};
}

ThermalQubit thermal_qubit(double E, double T) {
  if (!(E > 0.0)) throw std::domain_error("thermal_qubit: E must be > 0");
  if (!(T > 0.0)) throw std::domain_error("thermal_qubit: T must be > 0");
  return {1.0 / (std::exp(-E / T) + 1.0), E, T};
}

MachineSpec::MachineSpec(double E_C_, double E_H_, double T_C_, double T_R_,
                         double T_H_, double p_C_, double p_R_, double p_H_,
                         double g_)
    : E_C(E_C_), E_H(E_H_), E_R(E_C_ + E_H_),
      T_C(T_C_), T_R(T_R_), T_H(T_H_),
      p_C(p_C_), p_R(p_R_), p_H(p_H_), g(g_) {
  if (!(E_C > 0.0) || !(E_H > 0.0))
    throw std::invalid_argument("MachineSpec: energies must be > 0");
  if (E_C == E_H)
    throw std::invalid_argument("MachineSpec: E_C must differ from E_H");
  if (!(T_C > 0.0) || !(T_R > 0.0) || !(T_H > 0.0))
    throw std::invalid_argument("MachineSpec: temperatures must be > 0");
  if (!(T_C <= T_R && T_R <= T_H))
    throw std::invalid_argument("MachineSpec: require T_C <= T_R <= T_H");
  if (p_C < 0.0 || p_R < 0.0 || p_H < 0.0)
    throw std::invalid_argument("MachineSpec: rates must be >= 0");
  if (g < 0.0) throw std::invalid_argument("MachineSpec: g must be >= 0");
}

double MachineSpec::E(QubitLabel i) const {
  switch (i) {
    case QubitLabel::C: return E_C;
    case QubitLabel::R: return E_R;
    default: return E_H;
  }
}

double MachineSpec::T(QubitLabel i) const {
  switch (i) {
    case QubitLabel::C: return T_C;
    case QubitLabel::R: return T_R;
    default: return T_H;
  }
}

double MachineSpec::p(QubitLabel i) const {
  switch (i) {
    case QubitLabel::C: return p_C;
    case QubitLabel::R: return p_R;
    default: return p_H;
  }
}

Vec8d product_thermal_diag(const MachineSpec& spec) {
  Vec8d d;
  for (int k = 0; k < 8; ++k) {
    double v = 1.0;
    for (QubitLabel i : all_qubits) {
      const double r = spec.thermal(i).r;
      v *= bit_of(k, i) == 0 ? r : 1.0 - r;
    }
    d[k] = v;
  }
  return d;
}

Mat8c product_thermal(const MachineSpec& spec) {
  Mat8c rho = Mat8c::Zero();
  rho.diagonal() = product_thermal_diag(spec).cast<cxd>();
  return rho;
}

Mat2c reduce_to_qubit(const Mat8c& rho, QubitLabel i) {
  Mat2c out = Mat2c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 8; ++k) {
        if (bit_of(k, i) != a) continue;
        const int l = (a == b) ? k : flip_bit(k, i);
        out(a, b) += rho(k, l);
      }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  const double herm = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "hermitian_eigenvalues: input not Hermitian (deviation " << herm << ")";
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

void check_density(const Mat8c& rho) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    std::ostringstream os;
    os << "density matrix not Hermitian (deviation " << herm << ")";
    throw std::invalid_argument(os.str());
  }
  const double tr_err = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  if (tr_err > 1e-10) {
    std::ostringstream os;
    os << "density matrix trace deviates from 1 by " << tr_err;
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat8c> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << es.eigenvalues().minCoeff();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace qfridge
