#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cavsim/entanglement.hpp"
#include "cavsim/jcm.hpp"
#include "cavsim/tensor.hpp"
#include "helpers.hpp"

using namespace cavsim;
using namespace cavtest;

namespace {

// e^{-i H t} through the spectral decomposition of the Hermitian H.
ComplexMatrix expm_minus_i(const ComplexMatrix& h, double t) {
  const Eigensystem eig = herm_eig(h);
  ComplexVector phases(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k)
    phases(k) = std::exp(Complex{0.0, -eig.values(k) * t});
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

TEST_CASE("ladder operators: matrix elements and number operator") {
  const ComplexMatrix a = annihilation_operator(5);
  CHECK(std::abs(a(2, 3) - std::sqrt(3.0)) <= 1e-15);
  CHECK((ComplexMatrix(a.adjoint() * a) - number_operator(5)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("hamiltonians: Hermitian, with the expected couplings") {
  const ComplexMatrix rabi = rabi_hamiltonian(1.1, 1.0, 0.05, 6);
  CHECK((rabi - rabi.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);

  const ComplexMatrix jcm = jcm_hamiltonian(1.0, 0.1, 0.05, 6);
  CHECK((jcm - jcm.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
  // <e,n| H |g,n+1> = coupling * sqrt(n+1)
  const Index d = 7;
  for (Index n = 0; n + 1 < d; ++n)
    CHECK(std::abs(jcm(0 * d + n, 1 * d + n + 1) - 0.05 * std::sqrt(n + 1.0)) <= 1e-14);
  // the counter-rotating coupling appears only in the full dipole Hamiltonian
  CHECK(std::abs(jcm(0 * d + 1, 1 * d + 0)) == 0.0);
  CHECK(std::abs(rabi(0 * d + 1, 1 * d + 0)) > 0.0);
}

TEST_CASE("evolve_resonant_closed: full transfer at a quarter Rabi period") {
  const JointPureState psi =
      evolve_resonant_closed(AtomState::excited(), fock_field(0, 4), pi() / 2.0);
  CHECK(std::abs(psi.amp_g(1) - Complex{0.0, -1.0}) <= 1e-15);
  CHECK(std::abs(psi.amp_e(0)) <= 1e-15);
  CHECK(std::abs(psi.norm_sq() - 1.0) <= 1e-14);
}

TEST_CASE("evolve_resonant_closed: identity at t = 0") {
  auto gen = make_rng(41);
  const ComplexVector c = random_state(11, gen);
  const FieldState field{c};
  const AtomState atom{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
  const JointPureState psi = evolve_resonant_closed(atom, field, 0.0);
  const JointPureState ref = joint_state(atom, field);
  CHECK((psi.amplitudes - ref.amplitudes).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("resonant_propagator: identity at t = 0 and unitarity") {
  CHECK((resonant_propagator(0.0, 12) - ComplexMatrix::Identity(26, 26))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  const ComplexMatrix u = resonant_propagator(1.3, 30);
  CHECK((u * u.adjoint() - ComplexMatrix::Identity(62, 62)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("resonant_propagator: matches the spectral exponential of the interaction") {
  const Index n = 25;
  const ComplexMatrix u = resonant_propagator(0.7, n);
  const ComplexMatrix ref = expm_minus_i(resonant_interaction(1.0, n), 0.7);
  CHECK((u - ref).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("resonant_propagator: action on |e,0>") {
  const double lt = 0.45;
  const ComplexMatrix u = resonant_propagator(lt, 3);
  ComplexVector e0 = ComplexVector::Zero(8);
  e0(0) = 1.0;
  const ComplexVector out = u * e0;
  CHECK(std::abs(out(0) - std::cos(lt)) <= 1e-15);
  CHECK(std::abs(out(4 + 1) - Complex{0.0, -std::sin(lt)}) <= 1e-15);
}

TEST_CASE("closed form equals propagator application away from the truncation edge") {
  const Index n = 30;
  const double lt = 0.9;
  const ComplexMatrix u = resonant_propagator(lt, n);
  for (Index level = 0; level + 1 <= n - 1; ++level) {
    for (int atom_idx = 0; atom_idx < 2; ++atom_idx) {
      const AtomState atom = atom_idx == 0 ? AtomState::excited() : AtomState::ground();
      const JointPureState closed = evolve_resonant_closed(atom, fock_field(level, n), lt);
      ComplexVector basis = ComplexVector::Zero(2 * (n + 1));
      basis(atom_idx * (n + 1) + level) = 1.0;
      CHECK(((u * basis) - closed.amplitudes).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("closed form matches the spectral exponential for a coherent input") {
  // level 60 keeps the Poisson tail of nbar = 10 below 1e-13 at the edge
  const Index n = 60;
  const FieldState field = coherent_field(std::sqrt(10.0), n);
  const JointPureState closed = evolve_resonant_closed(AtomState::excited(), field, 0.7);
  const ComplexMatrix u = expm_minus_i(resonant_interaction(1.0, n), 0.7);
  const ComplexVector ref = u * joint_state(AtomState::excited(), field).amplitudes;
  CHECK((closed.amplitudes - ref).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("evolve_density: pure-state consistency and identity") {
  const ComplexMatrix u = resonant_propagator(0.4, 5);
  const JointPureState init = joint_state(AtomState::excited(), fock_field(0, 5));
  const DensityMatrix rho = DensityMatrix::from_pure(init.amplitudes, init.layout);
  const DensityMatrix evolved = evolve_density(rho, u);
  const ComplexVector psi = u * init.amplitudes;
  CHECK((evolved.matrix - psi * psi.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);

  const DensityMatrix same = evolve_density(rho, ComplexMatrix::Identity(12, 12));
  CHECK((same.matrix - rho.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("evolve_density: preserves trace and spectrum") {
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(0, 0) = 1.0;
  const DensityMatrix rho{kron(excited, thermal_field({10.0}, 2).matrix), HilbertLayout{2, 3}};
  const DensityMatrix evolved = evolve_density(rho, resonant_propagator(0.3, 2));
  CHECK(std::abs(evolved.trace() - 1.0) <= 1e-12);
  const RealVector before = herm_eig(rho.matrix).values;
  const RealVector after = herm_eig(evolved.matrix).values;
  CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("evolve_density: rejects bad operators") {
  auto gen = make_rng(42);
  const DensityMatrix rho{random_density(4, gen), HilbertLayout{2, 2}};
  CHECK_THROWS_AS((void)evolve_density(rho, ComplexMatrix::Identity(6, 6)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)evolve_density(rho, ComplexMatrix(2.0 * ComplexMatrix::Identity(4, 4))),
                  std::invalid_argument);
}

TEST_CASE("evolve_dispersive: exact return at chi_t = 2 pi") {
  const FieldState field = coherent_field(std::sqrt(10.0), 40);
  const AtomState atom{Complex{1.0 / std::sqrt(2.0), 0.0}, Complex{1.0 / std::sqrt(2.0), 0.0}};
  const JointPureState start = joint_state(atom, field);
  const JointPureState cycled = evolve_dispersive(atom, field, 2.0 * pi());
  CHECK((cycled.amplitudes - start.amplitudes).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("evolve_dispersive: no excitation exchange, only phases") {
  const FieldState field = coherent_field(std::sqrt(10.0), 40);
  const AtomState atom{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
  const JointPureState start = joint_state(atom, field);
  const JointPureState out = evolve_dispersive(atom, field, 1.7);
  for (Index k = 0; k < out.amplitudes.size(); ++k)
    CHECK(std::abs(std::abs(out.amplitudes(k)) - std::abs(start.amplitudes(k))) <= 1e-14);
}

TEST_CASE("evolve_dispersive: term-by-term phase law") {
  const FieldState field = coherent_field(std::sqrt(10.0), 30);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const AtomState atom{Complex{inv_sqrt2, 0.0}, Complex{inv_sqrt2, 0.0}};
  const double chi_t = pi() / 2.0;
  const JointPureState out = evolve_dispersive(atom, field, chi_t);
  for (Index n = 0; n <= 30; ++n) {
    const Complex expect_e =
        atom.c_e * field.coefficients(n) * std::exp(Complex{0.0, -chi_t * (n + 1.0)});
    const Complex expect_g =
        atom.c_g * field.coefficients(n) * std::exp(Complex{0.0, chi_t * double(n)});
    CHECK(std::abs(out.amp_e(n) - expect_e) <= 1e-12);
    CHECK(std::abs(out.amp_g(n) - expect_g) <= 1e-12);
  }
}

TEST_CASE("atomic_inversion: basis values and input checking") {
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(0, 0) = 1.0;
  CHECK(atomic_inversion({excited, HilbertLayout{2}}) == 1.0);
  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(1, 1) = 1.0;
  CHECK(atomic_inversion({ground, HilbertLayout{2}}) == -1.0);
  auto gen = make_rng(43);
  CHECK_THROWS_AS((void)atomic_inversion({random_density(3, gen), HilbertLayout{3}}),
                  std::invalid_argument);
}

TEST_CASE("atomic_inversion: reduction pipeline matches the cosine series") {
  const FieldState field = coherent_field(std::sqrt(10.0), 100);
  for (double lt : {0.5, 5.0, 12.0}) {
    const JointPureState psi = evolve_resonant_closed(AtomState::excited(), field, lt);
    const DensityMatrix rho = DensityMatrix::from_pure(psi.amplitudes, psi.layout);
    const double via_pipeline = atomic_inversion(partial_trace(rho, 0));
    double series = 0.0;
    for (Index n = 0; n <= 100; ++n)
      series += std::norm(field.coefficients(n)) * std::cos(2.0 * lt * std::sqrt(n + 1.0));
    CHECK(std::abs(via_pipeline - series) <= 1e-10);
  }
}

TEST_CASE("atomic_inversion: vanishes for the balanced dispersive state") {
  const FieldState field = coherent_field(std::sqrt(10.0), 60);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const AtomState atom{Complex{inv_sqrt2, 0.0} * std::exp(Complex{0.0, 0.4}),
                       Complex{inv_sqrt2, 0.0}};
  for (double chi_t : {0.0, 0.3, 1.0, 2.5}) {
    const JointPureState psi = evolve_dispersive(atom, field, chi_t);
    const DensityMatrix rho = DensityMatrix::from_pure(psi.amplitudes, psi.layout);
    CHECK(std::abs(atomic_inversion(partial_trace(rho, 0))) <= 1e-12);
  }
}

TEST_CASE("total_excitation: basis values and conservation") {
  CHECK(std::abs(total_excitation(joint_state(AtomState::excited(), fock_field(0, 3))) - 1.0) <=
        1e-15);
  CHECK(std::abs(total_excitation(joint_state(AtomState::ground(), fock_field(0, 3)))) <=
        1e-15);

  const FieldState field = coherent_field(std::sqrt(10.0), 100);
  const double reference = total_excitation(joint_state(AtomState::excited(), field));
  for (double lt : {1.0, 5.0, 20.0}) {
    const JointPureState psi = evolve_resonant_closed(AtomState::excited(), field, lt);
    CHECK(std::abs(total_excitation(psi) - reference) <= 1e-10);
  }
}
