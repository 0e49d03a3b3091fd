#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracle_helpers.hpp"
#include "qfridge/integrate.hpp"
#include "qfridge/liouvillian.hpp"
#include "qfridge/observables.hpp"
#include "qfridge/spectral.hpp"

using namespace qfridge;

namespace {

Eigen::VectorXcd vectorize(const Mat8c& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), 64);
}

Mat8c devectorize(const Eigen::VectorXcd& x) {
  return Eigen::Map<const Mat8c>(x.data());
}

}  // namespace

TEST_CASE("hamiltonian: diagonal energies plus the degenerate coupling") {
  const MachineSpec spec = oracle::base_machine(1e-2);
  const Mat8c H = build_hamiltonian(spec);

  const double expected_diag[8] = {0.0, 100.0, 101.0, 201.0, 1.0, 101.0, 102.0, 202.0};
  for (int k = 0; k < 8; ++k) CHECK(H(k, k).real() == expected_diag[k]);
  CHECK(H(2, 2) == H(5, 5));  // the degenerate pair shares E_C + E_H

  CHECK(H(2, 5).real() == 1e-2);
  CHECK(H(5, 2).real() == 1e-2);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (i == j || (i == 2 && j == 5) || (i == 5 && j == 2)) continue;
      CHECK(H(i, j) == cxd(0.0, 0.0));
    }
  CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() == 0.0);

  const Mat8c H0 = build_hamiltonian(MachineSpec(1, 100, 1, 1, 100, 0, 0, 0, 0));
  CHECK(H0(2, 5) == cxd(0.0, 0.0));
}

TEST_CASE("generator: fixed point, trace, hermiticity") {
  // At g = 0 the product thermal state is a fixed point of the reset channel.
  const MachineSpec frozen(1, 100, 1, 1, 100, 1e-5, 1e-3, 1e-5, 0);
  const Mat8c zero = apply_generator(frozen, product_thermal(frozen));
  CHECK(zero.cwiseAbs().maxCoeff() <= 1e-15);

  // The steady state solved in reduced coordinates annihilates the generator.
  const MachineSpec spec = oracle::base_machine(1e-2);
  const Vec9d v_inf = steady_state(build_reduced_system(spec));
  CHECK(apply_generator(spec, embed(v_inf)).cwiseAbs().maxCoeff() <= 1e-10);

  // Trace preservation and hermiticity preservation on random densities.
  for (unsigned seed : {21u, 22u, 23u}) {
    const Mat8c rho = oracle::random_density(seed);
    const Mat8c d = apply_generator(spec, rho);
    CHECK(std::abs(d.trace()) <= 1e-15);
    CHECK((d - d.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
  }

  // Dissipation-free generator on a diagonal state only feeds the (3,6) pair.
  const MachineSpec unitary(1, 100, 1, 1, 100, 0, 0, 0, 1e-2);
  Mat8c diag = Mat8c::Zero();
  const double a = 0.3, b = 0.2;
  diag(2, 2) = a;
  diag(5, 5) = b;
  diag(0, 0) = 0.5;
  const Mat8c d = apply_generator(unitary, diag);
  const cxd expected = cxd(0.0, -1.0) * unitary.g * (b - a);
  CHECK(std::abs(d(2, 5) - expected) <= 1e-18);
  CHECK(std::abs(d(5, 2) - std::conj(expected)) <= 1e-18);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if ((i == 2 && j == 5) || (i == 5 && j == 2)) continue;
      CHECK(std::abs(d(i, j)) == 0.0);
    }
}

TEST_CASE("full superoperator represents the generator") {
  const MachineSpec spec = oracle::asymmetric_machine(3e-3);
  const Eigen::MatrixXcd L = build_full_superoperator(spec);
  REQUIRE(L.rows() == 64);
  REQUIRE(L.cols() == 64);

  for (unsigned seed = 100; seed < 120; ++seed) {
    const Mat8c rho = oracle::random_hermitian_unit_trace(seed);
    const Eigen::VectorXcd lhs = L * vectorize(rho);
    const Eigen::VectorXcd rhs = vectorize(apply_generator(spec, rho));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // Trace preservation: the rows picking out diagonal entries sum to zero.
  Eigen::RowVectorXcd trace_row = Eigen::RowVectorXcd::Zero(64);
  for (int k = 0; k < 8; ++k) trace_row += L.row(9 * k);
  CHECK(trace_row.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("reduced affine system matches the projected generator") {
  const MachineSpec spec = oracle::base_machine(1e-2);
  const ReducedSystem sys = build_reduced_system(spec);

  for (unsigned seed = 200; seed < 250; ++seed) {
    const Vec9d v = oracle::random_reduced_state(seed);
    const Vec9d lhs = sys.A * v + sys.u;
    const Vec9d rhs = extract(apply_generator(spec, embed(v)));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // The Re rho_36 row is pure decay at the total reset rate, decoupled from
  // everything else; the Im row couples only the pair populations and itself.
  const double P = spec.p_sum();
  for (int j = 0; j < 9; ++j) {
    CHECK(sys.A(7, j) == (j == 7 ? -P : 0.0));
    if (j != 2 && j != 5 && j != 8) CHECK(sys.A(8, j) == 0.0);
  }
  CHECK(sys.A(8, 2) == spec.g);
  CHECK(sys.A(8, 5) == -spec.g);
  CHECK(sys.A(8, 8) == -P);
  CHECK(sys.u[7] == 0.0);
  CHECK(sys.u[8] == 0.0);

  // No dissipation, no affine part.
  const ReducedSystem free_sys =
      build_reduced_system(MachineSpec(1, 100, 1, 1, 100, 0, 0, 0, 1e-2));
  CHECK(free_sys.u.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed and extract round trips") {
  for (unsigned seed = 300; seed < 350; ++seed) {
    const Vec9d v = oracle::random_reduced_state(seed);
    const Mat8c rho = embed(v);
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-15);
    CHECK(rho(2, 5) == cxd(v[7], v[8]));
    CHECK(rho(5, 2) == std::conj(rho(2, 5)));
    const Vec9d back = extract(rho);
    CHECK((back - v).cwiseAbs().maxCoeff() == 0.0);
  }

  Mat8c stray = embed(oracle::random_reduced_state(3));
  stray(1, 4) = cxd(1e-6, 0.0);
  stray(4, 1) = cxd(1e-6, 0.0);
  CHECK_THROWS_AS(extract(stray), std::runtime_error);

  Mat8c tolerated = embed(oracle::random_reduced_state(4));
  tolerated(0, 7) = cxd(1e-11, 0.0);
  tolerated(7, 0) = cxd(1e-11, 0.0);
  CHECK_NOTHROW(extract(tolerated));
}

TEST_CASE("coherence closure: diagonal starts excite only the (3,6) pair") {
  const MachineSpec spec = oracle::base_machine(1e-2);
  const std::vector<double> times{0.0, 2.0, 4.0, 6.0};

  const Eigen::MatrixXcd L = build_full_superoperator(spec);
  const Mat8c rho0 = oracle::random_diagonal_density(42);
  const std::vector<Eigen::VectorXcd> full =
      evolve_rk4_full(spec, L, vectorize(rho0), times);
  for (const Eigen::VectorXcd& x : full) {
    const Mat8c rho = devectorize(x);
    double stray = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (i == j || (i == 2 && j == 5) || (i == 5 && j == 2)) continue;
        stray = std::max(stray, std::abs(rho(i, j)));
      }
    CHECK(stray <= 1e-12);
    CHECK(std::abs(rho(2, 5).real()) <= 1e-12);  // only Im rho_36 is driven
  }

  // In reduced coordinates Re rho_36 stays exactly at zero from such starts.
  const ReducedSystem sys = build_reduced_system(spec);
  const std::vector<Vec9d> reduced =
      evolve_rk4(spec, sys, reduced_thermal(spec), {0.0, 50.0, 500.0, 2000.0});
  for (const Vec9d& v : reduced) CHECK(std::abs(v[7]) <= 1e-15);
}

TEST_CASE("full and reduced evolutions agree") {
  const MachineSpec spec = oracle::base_machine(1e-2);
  const std::vector<double> times{0.0, 2.5, 5.0, 7.5, 10.0};

  const std::vector<Vec9d> reduced =
      evolve_rk4(spec, build_reduced_system(spec), reduced_thermal(spec), times);
  const std::vector<Eigen::VectorXcd> full = evolve_rk4_full(
      spec, build_full_superoperator(spec), vectorize(product_thermal(spec)), times);

  for (size_t k = 0; k < times.size(); ++k) {
    const Mat8c a = embed(reduced[k]);
    const Mat8c b = devectorize(full[k]);
    CHECK(trace_distance(a, 0.5 * (b + b.adjoint())) <= 1e-9);
  }
}

TEST_CASE("generator spectrum is strictly dissipative") {
  for (const MachineSpec& spec :
       {oracle::base_machine(1e-2), oracle::base_machine(1e-4),
        oracle::symmetric_machine(1e-1), oracle::asymmetric_machine(1e-6),
        oracle::moderate_machine(5e-3)}) {
    const Spectrum sp = eigendecompose(build_reduced_system(spec));
    for (int j = 0; j < 9; ++j) CHECK(sp.eigenvalues[j].real() < 0.0);
  }
}
