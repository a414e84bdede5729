#ifndef CAVSIM_STATES_HPP
#define CAVSIM_STATES_HPP

#include "cavsim/types.hpp"

namespace cavsim {

// hbar/k_B in K/THz with frequencies in angular THz, so that
// beta*omega = kHbarOverKb * omega / T for T in kelvin.
inline constexpr double kHbarOverKb = 7.6382;

// Probability mass a truncated coherent state may lose before callers
// should warn.
inline constexpr double kCoherentMassLossWarning = 1e-9;

// Two-level atom amplitudes, basis ordered {|e>, |g>}.
struct AtomState {
  Complex c_e;
  Complex c_g;

  static AtomState excited() { return {1.0, 0.0}; }
  static AtomState ground() { return {0.0, 1.0}; }

  double norm_sq() const { return std::norm(c_e) + std::norm(c_g); }
};

// Field amplitudes C_0..C_N over the Fock ladder |0>..|N>.
struct FieldState {
  ComplexVector coefficients;

  Index n_max() const { return coefficients.size() - 1; }
  double norm_sq() const { return coefficients.squaredNorm(); }
};

struct ThermalParams {
  double scaled_temperature = 0.0;  // T/omega0 in K/THz
};

// Coherent state C_n = e^{-|alpha|^2/2} alpha^n/sqrt(n!), generated by the
// stable recurrence C_{n+1} = C_n * alpha / sqrt(n+1).
FieldState coherent_field(Complex alpha, Index n_max);

FieldState fock_field(Index n, Index n_max);

// Mean thermal photon number nbar = 1/(e^{beta omega} - 1); defined as zero
// for nonpositive temperature.
double mean_photon_from_temperature(const ThermalParams& p);

struct AtomThermalWeights {
  double p_e;  // (e^{beta omega0} + 1)^-1
  double p_g;  // (e^{-beta omega0} + 1)^-1
};
AtomThermalWeights atom_thermal_weights(const ThermalParams& p);

// diag(P_e, P_g) in the {|e>, |g>} basis.
DensityMatrix thermal_atom(const ThermalParams& p);

// Diagonal thermal field with P_n = nbar^n/(1+nbar)^{n+1} on |0>..|n_max>.
// With renormalize the kept weights are rescaled to unit trace; without it
// the truncated tail mass is simply dropped.
DensityMatrix thermal_field(const ThermalParams& p, Index n_max, bool renormalize = true);

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

// Normalized 4-vector over qubit (x) qubit:
//   Psi+- = (|01> +- |10>)/sqrt2,  Phi+- = (|00> +- |11>)/sqrt2.
ComplexVector bell_state(BellKind kind);

const char* bell_name(BellKind kind);

// Zero-pad a qubit-pair state vector into a dim_a (x) dim_b space.
ComplexVector embed_qubit_pair(const ComplexVector& state, Index dim_a, Index dim_b);

}  // namespace cavsim

#endif  // CAVSIM_STATES_HPP
