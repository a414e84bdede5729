#ifndef CAVSIM_JCM_HPP
#define CAVSIM_JCM_HPP

#include "cavsim/states.hpp"

namespace cavsim {

// Operators on the truncated Fock ladder |0>..|n_max| and on the atomic qubit.
ComplexMatrix annihilation_operator(Index n_max);
ComplexMatrix number_operator(Index n_max);
ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

// Hamiltonians as data, atom (x) field ordering, hbar = 1.
// omega0 sigma_z/2 + omega a^dag a + coupling (sigma_+ + sigma_-)(a + a^dag)
ComplexMatrix rabi_hamiltonian(double omega0, double omega, double coupling, Index n_max);
// (omega + detuning) sigma_z/2 + omega a^dag a + coupling (sigma_+ a + sigma_- a^dag)
ComplexMatrix jcm_hamiltonian(double omega, double detuning, double coupling, Index n_max);
// coupling (sigma_+ a + sigma_- a^dag)  -- resonant interaction picture
ComplexMatrix resonant_interaction(double coupling, Index n_max);
// chi (sigma_z a^dag a + |e><e|)        -- dispersive interaction picture
ComplexMatrix dispersive_interaction(double chi, Index n_max);

// Joint atom-field pure state with layout {2, N+1}; flat index a*(N+1)+n,
// a = 0 for |e>, a = 1 for |g>.
struct JointPureState {
  ComplexVector amplitudes;
  HilbertLayout layout;

  Index field_dim() const { return layout.dim(1); }
  Complex amp_e(Index n) const { return amplitudes(n); }
  Complex amp_g(Index n) const { return amplitudes(field_dim() + n); }
  double norm_sq() const { return amplitudes.squaredNorm(); }
};

JointPureState joint_state(const AtomState& atom, const FieldState& field);

// Closed-form resonant evolution at scaled time lambda_t, with the boundary
// convention C_{-1} = C_{N+1} = 0.  States with support on the top ladder
// level lose the amplitude that would leave the truncated space.
JointPureState evolve_resonant_closed(const AtomState& atom, const FieldState& field,
                                      double lambda_t);

// Resonant evolution operator on the truncated space.  Each pair
// (|e,n>, |g,n+1>), n < N, rotates by lambda_t*sqrt(n+1); |g,0> is stationary
// and |e,N> is held fixed (its partner |g,N+1> lies outside the space), which
// keeps the operator exactly unitary on the kept ladder.
ComplexMatrix resonant_propagator(double lambda_t, Index n_max);

// rho -> u rho u^dag.  Throws std::invalid_argument on dimension mismatch or
// when u is not unitary within kHermitianTol.
DensityMatrix evolve_density(const DensityMatrix& rho, const ComplexMatrix& u);

// Dispersive phase evolution: amplitude of |e,n> is multiplied by
// e^{-i chi_t (n+1)}, that of |g,n> by e^{+i chi_t n}; moduli are unchanged.
JointPureState evolve_dispersive(const AtomState& atom, const FieldState& field,
                                 double chi_t);

// Tr[rho sigma_z] for a 2x2 atomic density matrix, in [-1, 1].
double atomic_inversion(const DensityMatrix& rho_atom);

// Total excitation number (⟨sigma_z⟩+1)/2 + <n>, conserved along resonant
// evolution away from the truncation edge.
double total_excitation(const JointPureState& state);

}  // namespace cavsim

#endif  // CAVSIM_JCM_HPP
