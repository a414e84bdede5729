#ifndef CAVSIM_TELEPORT_HPP
#define CAVSIM_TELEPORT_HPP

#include <array>

#include "cavsim/states.hpp"

namespace cavsim {

// Bell-measurement outcomes on the (A, C) pair and Bob's correction:
//   A: Psi-  -> identity      B: Phi-  -> sigma_x
//   C: Phi+  -> i sigma_y     D: Psi+  -> sigma_z
enum class TeleportOutcome { A = 0, B = 1, C = 2, D = 3 };

struct TeleportInput {
  Complex a;               // unknown qubit a|0> + b|1>
  Complex b;
  DensityMatrix resource;  // shared pair over A (x) B, unit trace, dims >= 2
};

struct TeleportReport {
  // Fidelity of Bob's corrected state per outcome; NaN marks an outcome of
  // zero probability (undefined, not zero).
  std::array<double, 4> fidelity;
  // Outcome probabilities; sum to 1.
  std::array<double, 4> probability;
  // Resource weight outside the qubit (x) qubit block, discarded before the
  // protocol.  The fidelities are unaffected by this renormalization.
  double discarded_weight;
};

// Deterministic LOCC teleportation over the given resource: projects
// rho_cav (x) |psi><psi|_C onto all four Bell states of (A, C), applies
// Bob's correction, and reports the fidelity <psi|rho_B|psi> of each
// renormalized branch together with its probability.
TeleportReport teleport(const TeleportInput& input);

// Closed-form per-outcome fidelities for the thermal single-photon-scheme
// resource, with c_n = cos(lt sqrt n), s_n = sin(lt sqrt n) and atomic
// thermal weights P_e, P_g:
//   F_a = F_d = [P_g(|a|^4 c1^2 + 2|a|^2|b|^2 c1 s1^2 + |b|^4 s1^4)
//                + P_e |a|^2|b|^2 c2^2 s1^2] / (|a|^2 c1^2 + |b|^2 s1^4)
//   F_b = F_c = same with c1^2 <-> s1^4 swapped in the pure terms and
//               denominator |a|^2 s1^4 + |b|^2 c1^2.
// Returns NaN when the denominator vanishes.  The denominators are the
// zero-temperature outcome traces, so these forms coincide with the
// projection pipeline exactly in the P_e -> 0 limit and deviate at finite
// temperature; see teleport() for the physically normalized values.
double teleport_fidelity_closed_form(TeleportOutcome which, Complex a, Complex b,
                                     double lambda_tau, const ThermalParams& thermal);

struct PurificationBound {
  double target_pairs;    // M
  double log_negativity;  // E_N of the resource
  double min_copies;      // M / E_N, +inf when E_N <= 0; a lower bound only
  bool bounded;
};

// Counting bound N >= M / E_N on the copies needed to distill M maximally
// entangled pairs.  No guarantee that min_copies suffices.
PurificationBound purification_bound(double target_pairs, double e_n);

}  // namespace cavsim

#endif  // CAVSIM_TELEPORT_HPP
