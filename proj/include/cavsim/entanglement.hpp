#ifndef CAVSIM_ENTANGLEMENT_HPP
#define CAVSIM_ENTANGLEMENT_HPP

#include "cavsim/states.hpp"

namespace cavsim {

// Von Neumann entropy -Tr[rho log2 rho] in bits.  Eigenvalues in
// [-kEigenvalueClampTol, 0) are clamped to zero before the logarithm;
// anything below that raises invariant_error.
double von_neumann_entropy(const DensityMatrix& rho);

// Closed-form entropy of the dispersive state built from the atom
// (|g> + e^{i phi}|e>)/sqrt2 and the given field, after scaled time chi_t:
//   S = -g+ log2 g+ - g- log2 g-,  g+- = (1 +- sqrt(x1^2 + x2^2))/2,
//   x1 = sum |C_n|^2 cos[chi_t (1-2n) - phi],
//   x2 = sum |C_n|^2 sin[chi_t (1-2n) - phi].
// g+- are the eigenvalues of the reduced atomic density matrix, so this
// matches von_neumann_entropy of that reduction.
double schmidt_entropy_dispersive(const FieldState& field, double phi, double chi_t);

struct NegativityValue {
  double negativity;      // sum (|lambda_i| - lambda_i)/2 over the partial transpose spectrum
  double log_negativity;  // log2(2 negativity + 1)
};

// Logarithmic negativity of a bipartite state; identical whichever subsystem
// is transposed.  Throws std::invalid_argument unless the layout has exactly
// two subsystems.
NegativityValue log_negativity(const DensityMatrix& rho, Index sub);

// <target|rho|target>, real in [0, 1]; for pure rho this is the squared
// overlap.  Throws std::invalid_argument on dimension mismatch.
double state_fidelity(const DensityMatrix& rho, const ComplexVector& target);

}  // namespace cavsim

#endif  // CAVSIM_ENTANGLEMENT_HPP
