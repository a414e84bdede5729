#include "cavsim/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "cavsim/tensor.hpp"

namespace cavsim {

namespace {

// Clamp rounding noise in [-tol, 0) to zero; anything lower is a genuine
// positivity violation.
double clamp_probability(double lambda) {
  if (lambda >= 0.0) return lambda;
  if (lambda >= -kEigenvalueClampTol) return 0.0;
  throw invariant_error("spectrum has an eigenvalue below -1e-10");
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigensystem eig = herm_eig(rho.matrix);
  double s = 0.0;
  for (Index i = 0; i < eig.values.size(); ++i)
    s += entropy_term(clamp_probability(eig.values(i)));
  return s;
}

double schmidt_entropy_dispersive(const FieldState& field, double phi, double chi_t) {
  double x1 = 0.0;
  double x2 = 0.0;
  for (Index n = 0; n <= field.n_max(); ++n) {
    const double pn = std::norm(field.coefficients(n));
    const double arg = chi_t * (1.0 - 2.0 * static_cast<double>(n)) - phi;
    x1 += pn * std::cos(arg);
    x2 += pn * std::sin(arg);
  }
  const double r = std::min(std::sqrt(x1 * x1 + x2 * x2), 1.0);
  const double g_plus = 0.5 * (1.0 + r);
  const double g_minus = 0.5 * (1.0 - r);
  return entropy_term(g_plus) + entropy_term(g_minus);
}

NegativityValue log_negativity(const DensityMatrix& rho, Index sub) {
  if (rho.layout.subsystems() != 2)
    throw std::invalid_argument("log_negativity: layout must be bipartite");
  const ComplexMatrix pt = partial_transpose(rho, sub);
  const Eigensystem eig = herm_eig(pt);
  double negativity = 0.0;
  for (Index i = 0; i < eig.values.size(); ++i)
    negativity += 0.5 * (std::abs(eig.values(i)) - eig.values(i));
  return {negativity, std::log2(2.0 * negativity + 1.0)};
}

double state_fidelity(const DensityMatrix& rho, const ComplexVector& target) {
  if (rho.matrix.rows() != target.size())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  const Complex f = target.adjoint() * rho.matrix * target;
  return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace cavsim
