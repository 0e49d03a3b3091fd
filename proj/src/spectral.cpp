// qfridge/spectral.cpp
#include "qfridge/spectral.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qfridge {

namespace {
double cond_of(const Eigen::MatrixXcd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  return smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
}
}  // namespace

Vec9d steady_state(const ReducedSystem& sys) {
  const double cond = cond_of(sys.A.cast<cxd>());
  if (!(cond < 1e14)) {
    std::ostringstream os;
    os << "steady_state: A ill-conditioned (cond estimate " << cond << ")";
    throw std::runtime_error(os.str());
  }
  Eigen::PartialPivLU<Mat9d> lu(sys.A);
  Vec9d v = lu.solve(-sys.u);
  v += lu.solve(-sys.u - sys.A * v);  // one step of iterative refinement
  const double res = (sys.A * v + sys.u).cwiseAbs().maxCoeff();
  if (!(res <= 1e-11)) {
    std::ostringstream os;
    os << "steady_state: residual " << res << " exceeds 1e-11";
    throw std::runtime_error(os.str());
  }
  return v;
}

Spectrum eigendecompose(const ReducedSystem& sys) {
  Eigen::EigenSolver<Mat9d> es(sys.A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: QR iteration did not converge");
  Spectrum s;
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = es.eigenvectors();
  // Real Schur output lists conjugate pairs adjacently; make the symmetry exact.
  for (int j = 0; j + 1 < 9; ++j) {
    if (s.eigenvalues[j].imag() > 0.0 &&
        std::abs(s.eigenvalues[j + 1] - std::conj(s.eigenvalues[j])) <
            1e-8 * (1.0 + std::abs(s.eigenvalues[j]))) {
      s.eigenvalues[j + 1] = std::conj(s.eigenvalues[j]);
      s.eigenvectors.col(j + 1) = s.eigenvectors.col(j).conjugate();
      ++j;
    }
  }
  s.coefficients.setZero();
  s.condition_number = cond_of(s.eigenvectors);
  Eigen::JacobiSVD<Mat9d> svd(sys.A);
  s.a_norm = svd.singularValues().maxCoeff();
  return s;
}

void solve_coefficients(Spectrum& spectrum, const Vec9d& v0, const Vec9d& v_inf) {
  if (!(spectrum.condition_number < 1e12)) {
    std::ostringstream os;
    os << "solve_coefficients: eigenbasis condition " << spectrum.condition_number
       << " too large (near-defective A); fall back to the integrator";
    throw std::runtime_error(os.str());
  }
  const Vec9c rhs = (v0 - v_inf).cast<cxd>();
  Eigen::PartialPivLU<Mat9c> lu(spectrum.eigenvectors);
  Vec9c c = lu.solve(rhs);
  c += lu.solve(rhs - spectrum.eigenvectors * c);
  const double res = (spectrum.eigenvectors * c - rhs).cwiseAbs().maxCoeff();
  if (!(res <= 1e-9)) {
    std::ostringstream os;
    os << "solve_coefficients: reconstruction residual " << res;
    throw std::runtime_error(os.str());
  }
  spectrum.coefficients = c;
}

Vec9d evolve_spectral(const Spectrum& spectrum, const Vec9d& v_inf, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve_spectral: t must be >= 0");
  Vec9c h = Vec9c::Zero();
  for (int j = 0; j < 9; ++j)
    h += spectrum.coefficients[j] * std::exp(spectrum.eigenvalues[j] * t) *
         spectrum.eigenvectors.col(j);
  const double imag = h.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-10) {
    std::ostringstream os;
    os << "evolve_spectral: imaginary residue " << imag;
    throw std::runtime_error(os.str());
  }
  return v_inf + h.real();
}

SpectrumClassification classify(const Spectrum& spectrum) {
  const double im_tol = 1e-10 * spectrum.a_norm;
  const double cluster = 1e-8 * spectrum.a_norm;
  SpectrumClassification out{};

  // lambda_max: largest real part among (numerically) real eigenvalues; ties
  // broken by eigenvector overlap with the population coordinates.
  int best = -1;
  double best_re = 0.0, best_overlap = -1.0;
  for (int j = 0; j < 9; ++j) {
    if (std::abs(spectrum.eigenvalues[j].imag()) > im_tol) continue;
    const double re = spectrum.eigenvalues[j].real();
    double overlap = 0.0;
    for (int i = 0; i < 7; ++i) overlap += std::norm(spectrum.eigenvectors(i, j));
    overlap /= spectrum.eigenvectors.col(j).squaredNorm();
    if (best < 0 || re > best_re + cluster ||
        (re > best_re - cluster && overlap > best_overlap)) {
      best = j;
      best_re = re;
      best_overlap = overlap;
    }
  }
  if (best < 0)
    throw std::runtime_error("classify: no real eigenvalue found");
  out.lambda_max = cxd{spectrum.eigenvalues[best].real(), 0.0};
  out.decay_rate = -out.lambda_max.real();

  // lambda_cp: complex pair of largest |Im|; ties broken by overlap with the
  // (Re rho_36, Im rho_36) coordinates.
  int cp = -1;
  double cp_im = 0.0, cp_overlap = -1.0;
  for (int j = 0; j < 9; ++j) {
    if (spectrum.eigenvalues[j].imag() <= im_tol) continue;
    const double im = spectrum.eigenvalues[j].imag();
    double overlap = (std::norm(spectrum.eigenvectors(7, j)) +
                      std::norm(spectrum.eigenvectors(8, j))) /
                     spectrum.eigenvectors.col(j).squaredNorm();
    if (cp < 0 || im > cp_im + cluster ||
        (im > cp_im - cluster && overlap > cp_overlap)) {
      cp = j;
      cp_im = im;
      cp_overlap = overlap;
    }
  }
  if (cp >= 0) {
    out.has_complex_pair = true;
    out.lambda_cp = spectrum.eigenvalues[cp];
    out.damping_rate = -out.lambda_cp.real();
    out.oscillation_angular_frequency = out.lambda_cp.imag();
  } else {
    out.has_complex_pair = false;
    out.lambda_cp = cxd{0.0, 0.0};
    out.damping_rate = 0.0;
    out.oscillation_angular_frequency = 0.0;
  }
  return out;
}

}  // namespace qfridge
