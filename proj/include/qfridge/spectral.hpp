// qfridge/spectral.hpp — eigendecomposition of the reduced generator, steady
// state, spectral time evolution, and spectrum classification.
#pragma once

#include "qfridge/liouvillian.hpp"

namespace qfridge {

using Vec9c = Eigen::Matrix<cxd, 9, 1>;
using Mat9c = Eigen::Matrix<cxd, 9, 9>;

struct Spectrum {
  Vec9c eigenvalues;
  Mat9c eigenvectors;      // columns e_j
  Vec9c coefficients;      // c_j for a given initial state (zero until solved)
  double condition_number; // of the eigenvector matrix
  double a_norm;           // ||A||_2 estimate used for Im thresholds
};

// v_inf = -A^{-1} u. Throws std::runtime_error carrying the condition estimate
// when cond(A) >= 1e14.
Vec9d steady_state(const ReducedSystem& sys);

// Diagonalize A; conjugate-pair symmetry of (lambda, e) enforced exactly.
Spectrum eigendecompose(const ReducedSystem& sys);

// Solve sum_j c_j e_j = v0 - v_inf. Throws std::runtime_error advising the
// integrator fallback when cond(eigenvectors) >= 1e12.
void solve_coefficients(Spectrum& spectrum, const Vec9d& v0, const Vec9d& v_inf);

// v(t) = v_inf + sum_j c_j exp(lambda_j t) e_j (real by conjugate symmetry).
Vec9d evolve_spectral(const Spectrum& spectrum, const Vec9d& v_inf, double t);

struct SpectrumClassification {
  cxd lambda_max;                        // real eigenvalue of largest real part
  double decay_rate;                     // -Re lambda_max
  bool has_complex_pair;                 // overdamped regime flag when false
  cxd lambda_cp;                         // Im > 0 representative (if present)
  double damping_rate;                   // -Re lambda_cp (0 if absent)
  double oscillation_angular_frequency;  // Im lambda_cp (0 if absent)
};

SpectrumClassification classify(const Spectrum& spectrum);

}  // namespace qfridge
