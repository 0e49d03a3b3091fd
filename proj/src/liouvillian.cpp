// qfridge/liouvillian.cpp
#include "qfridge/liouvillian.hpp"

#include <sstream>
#include <stdexcept>

namespace qfridge {

namespace {
constexpr cxd kI{0.0, 1.0};

// tau_i (x) Tr_i(rho): reset qubit i to its thermal state.
Mat8c reset_channel(const MachineSpec& spec, QubitLabel i, const Mat8c& rho) {
  const double r = spec.thermal(i).r;
  const double w[2] = {r, 1.0 - r};
  Mat8c out = Mat8c::Zero();
  // Tr_i(rho) indexed by the bits of the other two qubits; re-tensor with tau_i.
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 8; ++l) {
      if (bit_of(k, i) != bit_of(l, i)) continue;  // partial trace is bit-diagonal in i
      const cxd t = rho(k, l);
      if (t == cxd{0.0, 0.0}) continue;
      for (int a = 0; a < 2; ++a) {
        const int kk = bit_of(k, i) == a ? k : flip_bit(k, i);
        const int ll = bit_of(l, i) == a ? l : flip_bit(l, i);
        out(kk, ll) += w[a] * t;
      }
    }
  return out;
}
}  // namespace

Mat8c build_hamiltonian(const MachineSpec& spec) {
  Mat8c H = Mat8c::Zero();
  for (int k = 0; k < 8; ++k) {
    double e = 0.0;
    for (QubitLabel i : all_qubits)
      if (bit_of(k, i)) e += spec.E(i);
    H(k, k) = e;
  }
  H(2, 5) += spec.g;  // |010><101| + h.c. (1-based elements (3,6) and (6,3))
  H(5, 2) += spec.g;
  return H;
}

Mat8c apply_generator(const MachineSpec& spec, const Mat8c& rho) {
  const Mat8c H = build_hamiltonian(spec);
  Mat8c d = -kI * (H * rho - rho * H);
  for (QubitLabel i : all_qubits) {
    const double p = spec.p(i);
    if (p == 0.0) continue;
    d += p * (reset_channel(spec, i, rho) - rho);
  }
  return d;
}

Eigen::MatrixXcd build_full_superoperator(const MachineSpec& spec) {
  const Mat8c H = build_hamiltonian(spec);
  const Eigen::MatrixXcd I8 = Eigen::MatrixXcd::Identity(8, 8);
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(64, 64);
  // vec(H rho - rho H) = (I (x) H - H^T (x) I) vec(rho), column stacking.
  for (int c = 0; c < 8; ++c)
    for (int r = 0; r < 8; ++r)
      for (int k = 0; k < 8; ++k) {
        L(c * 8 + r, c * 8 + k) += -kI * H(r, k);
        L(c * 8 + r, k * 8 + r) += kI * H(k, c);
      }
  for (QubitLabel i : all_qubits) {
    const double p = spec.p(i);
    if (p == 0.0) continue;
    const double ri = spec.thermal(i).r;
    const double w[2] = {ri, 1.0 - ri};
    // vec(tau_i (x) Tr_i(rho)) = sum_{a,b} w_a (K_ab (x) K_ab) vec(rho) with
    // real Kraus maps K_ab = |a><b|_i (x) I; the source bit b must match on
    // both sides or the partial trace would pick up cross-bit coherences.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Eigen::Matrix<double, 8, 8> K = Eigen::Matrix<double, 8, 8>::Zero();
        for (int k = 0; k < 8; ++k) {
          if (bit_of(k, i) != b) continue;
          const int kk = bit_of(k, i) == a ? k : flip_bit(k, i);
          K(kk, k) = 1.0;
        }
        for (int c = 0; c < 8; ++c)
          for (int r = 0; r < 8; ++r)
            for (int cc = 0; cc < 8; ++cc)
              for (int rr = 0; rr < 8; ++rr)
                if (K(r, rr) != 0.0 && K(c, cc) != 0.0)
                  L(c * 8 + r, cc * 8 + rr) += p * w[a] * K(r, rr) * K(c, cc);
      }
    L -= p * Eigen::MatrixXcd::Identity(64, 64);
  }
  return L;
}

ReducedSystem build_reduced_system(const MachineSpec& spec) {
  ReducedSystem sys;
  sys.A.setZero();
  sys.u.setZero();
  // add(row, k): coefficient of population rho_kk (0-based k) in d v_row/dt;
  // rho_77 (1-based 88) is eliminated through rho_77 = 1 - sum_{k<7} rho_kk.
  auto add = [&sys](int row, int k, double val) {
    if (k == 7) {
      sys.u[row] += val;
      for (int j = 0; j < 7; ++j) sys.A(row, j) -= val;
    } else {
      sys.A(row, k) += val;
    }
  };
  for (int k = 0; k < 7; ++k) {
    for (QubitLabel i : all_qubits) {
      const double p = spec.p(i);
      if (p == 0.0) continue;
      const double r = spec.thermal(i).r;
      const double w = bit_of(k, i) == 0 ? r : 1.0 - r;
      // d rho_kk += p (w (rho_kk + rho_ff) - rho_kk), f = flip of k on qubit i.
      add(k, k, p * (w - 1.0));
      add(k, flip_bit(k, i), p * w);
    }
  }
  const double P = spec.p_sum();
  const double g = spec.g;
  // Unitary part on the degenerate pair: rho_36 = x + i y (1-based element (3,6)).
  sys.A(2, 8) += -2.0 * g;  // d rho_33 = -2 g y + ...
  sys.A(5, 8) += 2.0 * g;   // d rho_66 = +2 g y + ...
  sys.A(7, 7) += -P;        // d x = -P x
  sys.A(8, 8) += -P;        // d y = g (rho_33 - rho_66) - P y
  sys.A(8, 2) += g;
  sys.A(8, 5) += -g;
  return sys;
}

Mat8c embed(const Vec9d& v) {
  Mat8c rho = Mat8c::Zero();
  double s = 0.0;
  for (int k = 0; k < 7; ++k) {
    rho(k, k) = v[k];
    s += v[k];
  }
  rho(7, 7) = 1.0 - s;
  rho(2, 5) = cxd{v[7], v[8]};
  rho(5, 2) = cxd{v[7], -v[8]};
  return rho;
}

Vec9d extract(const Mat8c& rho) {
  double stray = 0.0;
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 8; ++l) {
      if (k == l || (k == 2 && l == 5) || (k == 5 && l == 2)) continue;
      stray = std::max(stray, std::abs(rho(k, l)));
    }
  if (stray > 1e-10) {
    std::ostringstream os;
    os << "extract: off-diagonal support outside (3,6) with magnitude " << stray;
    throw std::runtime_error(os.str());
  }
  Vec9d v;
  for (int k = 0; k < 7; ++k) v[k] = rho(k, k).real();
  v[7] = rho(2, 5).real();
  v[8] = rho(2, 5).imag();
  return v;
}

Vec9d reduced_thermal(const MachineSpec& spec) {
  const Vec8d d = product_thermal_diag(spec);
  Vec9d v = Vec9d::Zero();
  for (int k = 0; k < 7; ++k) v[k] = d[k];
  return v;
}

}  // namespace qfridge
