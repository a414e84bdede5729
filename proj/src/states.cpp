#include "cavsim/states.hpp"

#include <cmath>

namespace cavsim {

FieldState coherent_field(Complex alpha, Index n_max) {
  if (n_max < 0) throw std::invalid_argument("coherent_field: n_max must be >= 0");
  ComplexVector c(n_max + 1);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (Index n = 0; n < n_max; ++n)
    c(n + 1) = c(n) * alpha / std::sqrt(static_cast<double>(n + 1));
  return {std::move(c)};
}

FieldState fock_field(Index n, Index n_max) {
  if (n < 0 || n > n_max)
    throw std::invalid_argument("fock_field: level outside the truncated ladder");
  ComplexVector c = ComplexVector::Zero(n_max + 1);
  c(n) = 1.0;
  return {std::move(c)};
}

double mean_photon_from_temperature(const ThermalParams& p) {
  if (p.scaled_temperature <= 0.0) return 0.0;
  return 1.0 / std::expm1(kHbarOverKb / p.scaled_temperature);
}

AtomThermalWeights atom_thermal_weights(const ThermalParams& p) {
  if (p.scaled_temperature <= 0.0) return {0.0, 1.0};
  const double beta_omega = kHbarOverKb / p.scaled_temperature;
  return {1.0 / (std::exp(beta_omega) + 1.0), 1.0 / (std::exp(-beta_omega) + 1.0)};
}

DensityMatrix thermal_atom(const ThermalParams& p) {
  const auto w = atom_thermal_weights(p);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = w.p_e;
  m(1, 1) = w.p_g;
  return {std::move(m), HilbertLayout{2}};
}

DensityMatrix thermal_field(const ThermalParams& p, Index n_max, bool renormalize) {
  if (n_max < 0) throw std::invalid_argument("thermal_field: n_max must be >= 0");
  const double nbar = mean_photon_from_temperature(p);
  ComplexMatrix m = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  double total = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    const double pn = std::pow(nbar, static_cast<double>(n)) /
                      std::pow(1.0 + nbar, static_cast<double>(n + 1));
    m(n, n) = pn;
    total += pn;
  }
  if (renormalize && total > 0.0) m /= total;
  return {std::move(m), HilbertLayout{n_max + 1}};
}

ComplexVector bell_state(BellKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (kind) {
    case BellKind::PsiPlus:  v(1) = r; v(2) = r; break;
    case BellKind::PsiMinus: v(1) = r; v(2) = -r; break;
    case BellKind::PhiPlus:  v(0) = r; v(3) = r; break;
    case BellKind::PhiMinus: v(0) = r; v(3) = -r; break;
  }
  return v;
}

const char* bell_name(BellKind kind) {
  switch (kind) {
    case BellKind::PsiPlus:  return "Psi+";
    case BellKind::PsiMinus: return "Psi-";
    case BellKind::PhiPlus:  return "Phi+";
    case BellKind::PhiMinus: return "Phi-";
  }
  return "?";
}

ComplexVector embed_qubit_pair(const ComplexVector& state, Index dim_a, Index dim_b) {
  if (state.size() != 4)
    throw std::invalid_argument("embed_qubit_pair: expected a qubit-pair state");
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("embed_qubit_pair: target dims must be >= 2");
  ComplexVector out = ComplexVector::Zero(dim_a * dim_b);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) out(i * dim_b + j) = state(i * 2 + j);
  return out;
}

}  // namespace cavsim
