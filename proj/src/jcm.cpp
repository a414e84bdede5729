#include "cavsim/jcm.hpp"

#include <cmath>

#include "cavsim/tensor.hpp"

namespace cavsim {

namespace {
constexpr Complex kI{0.0, 1.0};

void check_normalized(const AtomState& atom, const FieldState& field) {
  if (std::abs(atom.norm_sq() - 1.0) > 1e-9)
    throw std::invalid_argument("atom state not normalized");
  if (std::abs(field.norm_sq() - 1.0) > 1e-6)
    throw std::invalid_argument("field state not normalized");
}
}  // namespace

ComplexMatrix annihilation_operator(Index n_max) {
  ComplexMatrix a = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  for (Index n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix number_operator(Index n_max) {
  ComplexMatrix n = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  for (Index k = 0; k <= n_max; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

ComplexMatrix sigma_plus() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = 1.0;  // |e><g|
  return s;
}

ComplexMatrix sigma_minus() { return sigma_plus().adjoint(); }

ComplexMatrix sigma_x() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = 1.0;
  s(1, 0) = 1.0;
  return s;
}

ComplexMatrix sigma_y() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = -kI;
  s(1, 0) = kI;
  return s;
}

ComplexMatrix sigma_z() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}

ComplexMatrix rabi_hamiltonian(double omega0, double omega, double coupling, Index n_max) {
  const ComplexMatrix a = annihilation_operator(n_max);
  const ComplexMatrix id_f = ComplexMatrix::Identity(n_max + 1, n_max + 1);
  return 0.5 * omega0 * kron(sigma_z(), id_f) +
         omega * kron(ComplexMatrix::Identity(2, 2), number_operator(n_max)) +
         coupling * kron(sigma_x(), ComplexMatrix(a + a.adjoint()));
}

ComplexMatrix jcm_hamiltonian(double omega, double detuning, double coupling, Index n_max) {
  const ComplexMatrix id_f = ComplexMatrix::Identity(n_max + 1, n_max + 1);
  return 0.5 * (omega + detuning) * kron(sigma_z(), id_f) +
         omega * kron(ComplexMatrix::Identity(2, 2), number_operator(n_max)) +
         resonant_interaction(coupling, n_max);
}

ComplexMatrix resonant_interaction(double coupling, Index n_max) {
  const ComplexMatrix a = annihilation_operator(n_max);
  return coupling * (kron(sigma_plus(), a) + kron(sigma_minus(), ComplexMatrix(a.adjoint())));
}

ComplexMatrix dispersive_interaction(double chi, Index n_max) {
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(0, 0) = 1.0;
  const ComplexMatrix id_f = ComplexMatrix::Identity(n_max + 1, n_max + 1);
  return chi * (kron(sigma_z(), number_operator(n_max)) + kron(excited, id_f));
}

JointPureState joint_state(const AtomState& atom, const FieldState& field) {
  const Index d = field.coefficients.size();
  ComplexVector amp(2 * d);
  amp.head(d) = atom.c_e * field.coefficients;
  amp.tail(d) = atom.c_g * field.coefficients;
  return {std::move(amp), HilbertLayout{2, d}};
}

JointPureState evolve_resonant_closed(const AtomState& atom, const FieldState& field,
                                      double lambda_t) {
  check_normalized(atom, field);
  const Index n_top = field.n_max();
  const Index d = n_top + 1;
  auto c = [&](Index n) -> Complex {
    return (n >= 0 && n <= n_top) ? field.coefficients(n) : Complex{0.0};
  };
  ComplexVector amp(2 * d);
  for (Index n = 0; n <= n_top; ++n) {
    const double wp = lambda_t * std::sqrt(static_cast<double>(n + 1));
    const double wn = lambda_t * std::sqrt(static_cast<double>(n));
    amp(n) = atom.c_e * c(n) * std::cos(wp) - kI * atom.c_g * c(n + 1) * std::sin(wp);
    amp(d + n) = -kI * atom.c_e * c(n - 1) * std::sin(wn) + atom.c_g * c(n) * std::cos(wn);
  }
  return {std::move(amp), HilbertLayout{2, d}};
}

ComplexMatrix resonant_propagator(double lambda_t, Index n_max) {
  if (n_max < 0) throw std::invalid_argument("resonant_propagator: n_max must be >= 0");
  const Index d = n_max + 1;
  ComplexMatrix u = ComplexMatrix::Zero(2 * d, 2 * d);
  u(d, d) = 1.0;          // |g,0>
  u(n_max, n_max) = 1.0;  // |e,N>: partner lies outside the space
  for (Index n = 0; n < n_max; ++n) {
    const double theta = lambda_t * std::sqrt(static_cast<double>(n + 1));
    const Index e_n = n;
    const Index g_n1 = d + n + 1;
    u(e_n, e_n) = std::cos(theta);
    u(g_n1, g_n1) = std::cos(theta);
    u(g_n1, e_n) = -kI * std::sin(theta);
    u(e_n, g_n1) = -kI * std::sin(theta);
  }
  return u;
}

DensityMatrix evolve_density(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() != rho.matrix.rows())
    throw std::invalid_argument("evolve_density: dimension mismatch");
  const double unitarity =
      (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (unitarity > kHermitianTol)
    throw std::invalid_argument("evolve_density: operator not unitary within tolerance");
  return {u * rho.matrix * u.adjoint(), rho.layout};
}

JointPureState evolve_dispersive(const AtomState& atom, const FieldState& field,
                                 double chi_t) {
  check_normalized(atom, field);
  const Index d = field.coefficients.size();
  ComplexVector amp(2 * d);
  for (Index n = 0; n < d; ++n) {
    const Complex cn = field.coefficients(n);
    amp(n) = atom.c_e * cn * std::exp(-kI * (chi_t * static_cast<double>(n + 1)));
    amp(d + n) = atom.c_g * cn * std::exp(kI * (chi_t * static_cast<double>(n)));
  }
  return {std::move(amp), HilbertLayout{2, d}};
}

double atomic_inversion(const DensityMatrix& rho_atom) {
  if (rho_atom.matrix.rows() != 2 || rho_atom.matrix.cols() != 2)
    throw std::invalid_argument("atomic_inversion: expected a 2x2 density matrix");
  return rho_atom.matrix(0, 0).real() - rho_atom.matrix(1, 1).real();
}

double total_excitation(const JointPureState& state) {
  const Index d = state.field_dim();
  double inversion = 0.0;
  double photons = 0.0;
  for (Index n = 0; n < d; ++n) {
    const double pe = std::norm(state.amp_e(n));
    const double pg = std::norm(state.amp_g(n));
    inversion += pe - pg;
    photons += static_cast<double>(n) * (pe + pg);
  }
  return 0.5 * (inversion + 1.0) + photons;
}

}  // namespace cavsim
