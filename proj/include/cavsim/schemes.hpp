#ifndef CAVSIM_SCHEMES_HPP
#define CAVSIM_SCHEMES_HPP

#include <vector>

#include "cavsim/states.hpp"

namespace cavsim {

// Two measurement-based cavity-entangling protocols.  An atom traverses
// cavities A then B and is measured in {|e>, |g>}; finding |g> collapses the
// cavity pair into an entangled state.
//
//   BrownePlenio: atom |e>, cavities |0>|0>, target Psi+.
//   SinglePhoton: atom |g>, cavities |1>|0>, target Psi-.
enum class Scheme { BrownePlenio, SinglePhoton };

enum class ThermalTarget { None, Cavities, Atom };

struct SchemeConfig {
  Scheme scheme = Scheme::BrownePlenio;
  double lambda_tau = 0.0;  // scaled interaction time with cavity A
  double epsilon = 0.0;     // tau_B = tau_A * (1 - epsilon)
  ThermalTarget thermal_target = ThermalTarget::None;
  ThermalParams thermal;
  Index n_max = 3;          // pure-path cavity truncation level
  Index thermal_n_max = 1;  // thermal field truncation level
  bool renormalize_thermal = true;

  double lambda_tau_b() const { return lambda_tau * (1.0 - epsilon); }

  // n_max >= 1, epsilon < 1, thermal target compatible with the scheme
  // (BrownePlenio admits thermal cavities, SinglePhoton a thermal atom).
  void validate() const;
};

// Post-selected (unnormalized) two-cavity state after the atom, prepared in
// `atom`, has interacted with fields A and B for scaled times lambda_tau_a
// and lambda_tau_b and been measured in |g>.  The squared norm is the
// probability of that measurement outcome.
struct TwoCavityState {
  ComplexVector amplitudes;  // unnormalized, layout {dim_a, dim_b}
  HilbertLayout layout;
  double success_probability;
};

TwoCavityState general_two_cavity_state(const AtomState& atom,
                                        const FieldState& field_a,
                                        const FieldState& field_b,
                                        double lambda_tau_a, double lambda_tau_b);

// Closed-form fidelity of the post-selected state against the scheme target:
//   BrownePlenio: 1/2 + cos(lt)/(cos^2(lt) + 1)
//   SinglePhoton: 1/2 + sin^2(2 lt)/(cos(4 lt) + 3)
// Caution: the single-photon form corresponds to the state
// sin^2(lt)|01> - cos^2(lt)|10>, while the exact post-selected state is
// sin^2(lt)|01> - cos(lt)|10> (first power); the two agree only where
// sin^2(lt) = cos(lt).  The exact-state fidelity is available from
// run_scheme's cavity_state via state_fidelity.
double scheme_fidelity(Scheme s, double lambda_tau);

// Closed-form success probability of measuring |g>:
//   BrownePlenio: 1 - cos^4(lt)
//   SinglePhoton: 1 - sin^2(2 lt)/4
// Both match the numeric path exactly.
double scheme_success_probability(Scheme s, double lambda_tau);

// Unequal-time fidelity closed forms with tau_B = tau_A (1 - epsilon); they
// reduce to scheme_fidelity at epsilon = 0 (where they are evaluated as
// 0/0-free equal-time forms).
double scheme_fidelity_unequal(Scheme s, double lambda_tau, double epsilon);

// Success probability sin^2(lambda_tau) of preparing the |1>_A|0>_B input of
// the single-photon scheme with one excited auxiliary atom.  Not folded into
// the scheme's reported probability.
double single_photon_prep_probability(double lambda_tau);

// Positive roots of sin^4(lt) = cos^2(lt) = cos(lt) sin^2(lt):
// lt = 2(pi n +- atan(sqrt(sqrt(5) - 2))), sorted ascending; `branches` is the
// largest n included.  At these times the thermal single-photon scheme yields
// an exact Bell state in the zero-temperature limit.
std::vector<double> ideal_interaction_times(int branches);
double lowest_ideal_interaction_time();

struct SchemeOutcome {
  DensityMatrix cavity_state;    // normalized, over A (x) B
  double success_probability;    // trace before renormalization
  double fidelity_vs_target;     // closed form on the pure path
  BellKind target;
  double log_negativity;         // E_N of cavity_state
};

// Runs the configured scheme.  Pure path: numeric post-selected state plus
// the closed-form fidelity.  Thermal path: full density-matrix pipeline
// (thermal input, propagators, <g| projection, renormalization), fidelity
// evaluated against the embedded Bell target.
SchemeOutcome run_scheme(const SchemeConfig& config);

}  // namespace cavsim

#endif  // CAVSIM_SCHEMES_HPP
