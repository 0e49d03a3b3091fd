// qfridge/observables.cpp
#include "qfridge/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qfridge {

namespace {
// 1-based population pairs of Eq-10 partitions: j -> (j-th pair), 0-based here.
constexpr int kPairA[3] = {0, 1, 3};
constexpr int kPairB[3] = {7, 6, 4};

double clamped_sqrt_product(double a, double b) {
  return std::sqrt(std::max(a, 0.0) * std::max(b, 0.0));
}
}  // namespace

Temperature effective_temperature_from_r(double r, double E) {
  if (!(E > 0.0)) throw std::domain_error("effective_temperature: E must be > 0");
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("effective_temperature: population outside [0,1]");
  if (std::abs(r - 0.5) <= 1e-12)
    return {std::numeric_limits<double>::infinity(), TempRegime::infinite};
  const double T = E / std::log(r / (1.0 - r));
  return {T, T >= 0.0 ? TempRegime::positive : TempRegime::negative};
}

Temperature effective_temperature(const Mat2c& reduced, double E) {
  const double off = std::max(std::abs(reduced(0, 1)), std::abs(reduced(1, 0)));
  if (off > 1e-10) {
    std::ostringstream os;
    os << "effective_temperature: reduced state not diagonal (|off| = " << off << ")";
    throw std::invalid_argument(os.str());
  }
  return effective_temperature_from_r(reduced(0, 0).real(), E);
}

double trace_distance(const Mat8c& rho1, const Mat8c& rho2) {
  const std::vector<double> ev = hermitian_eigenvalues(rho1 - rho2);
  double s = 0.0;
  for (double x : ev) s += std::abs(x);
  return std::clamp(0.5 * s, 0.0, 1.0);
}

WitnessValue witness(const Mat8c& rho, unsigned S_mask) {
  Partition part;
  switch (S_mask) {
    case 0b001u: part = Partition::R_CH; break;
    case 0b010u: part = Partition::C_RH; break;
    case 0b100u: part = Partition::CR_H; break;
    case 0b111u: part = Partition::genuine; break;
    default:
      throw std::invalid_argument(
          "witness: S must be one of {1}, {2}, {3}, {1,2,3}");
  }
  double sum = 0.0;
  for (int j = 0; j < 3; ++j)
    if (S_mask & (1u << j))
      sum += clamped_sqrt_product(rho(kPairA[j], kPairA[j]).real(),
                                  rho(kPairB[j], kPairB[j]).real());
  const double value = 2.0 * (std::abs(rho(2, 5)) - sum);
  return {value, part, S_mask};
}

WitnessValue witness(const Mat8c& rho, Partition partition) {
  switch (partition) {
    case Partition::R_CH: return witness(rho, 0b001u);
    case Partition::C_RH: return witness(rho, 0b010u);
    case Partition::CR_H: return witness(rho, 0b100u);
    default: return witness(rho, 0b111u);
  }
}

VirtualTemperature virtual_temperature(const MachineSpec& spec) {
  const double den = spec.E_R / spec.T_R - spec.E_H / spec.T_H;
  if (std::abs(den) <= 1e-14)
    throw std::domain_error("virtual_temperature: degenerate virtual qubit (E_R/T_R = E_H/T_H)");
  const double T_V = spec.E_C / den;
  Temperature t{T_V, T_V >= 0.0 ? TempRegime::positive : TempRegime::negative};
  return {t, T_V >= 0.0 && T_V < spec.T_C};
}

double max_entanglement(const MachineSpec& spec, Partition kind) {
  double factor;
  if (kind == Partition::R_CH) factor = 2.0;
  else if (kind == Partition::genuine) factor = 6.0;
  else
    throw std::invalid_argument("max_entanglement: closed form covers R|CH and genuine only");
  const double a = spec.E_R / spec.T_R;
  const double b = spec.E_C / spec.T_C + spec.E_H / spec.T_H;
  double logN = 0.0;
  for (QubitLabel i : all_qubits)
    logN += spec.E(i) / spec.T(i) + std::log1p(std::exp(-spec.E(i) / spec.T(i)));
  const double m = std::max(a, b);
  const double first = std::exp(m - logN) * -std::expm1(-std::abs(a - b));
  const double second = factor * std::exp(0.5 * (a + b) - logN);
  return first - second;
}

SwapMinimum min_unitary_temperature(const MachineSpec& spec) {
  if (!(spec.g > 0.0))
    throw std::invalid_argument("min_unitary_temperature: g must be > 0");
  const Vec8d d = product_thermal_diag(spec);
  const double r_c = spec.thermal(QubitLabel::C).r - d[2] + std::max(d[2], d[5]);
  return {effective_temperature_from_r(r_c, spec.E_C), M_PI / (2.0 * spec.g), r_c};
}

}  // namespace qfridge
