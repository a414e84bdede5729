#include "cavsim/schemes.hpp"

#include <algorithm>
#include <cmath>

#include "cavsim/entanglement.hpp"
#include "cavsim/jcm.hpp"
#include "cavsim/tensor.hpp"

namespace cavsim {

namespace {

constexpr Complex kI{0.0, 1.0};

// Promote an operator on (atom, one field) of the layout {2, da, db} to the
// full space; identity on the other field.  Flat index (a*da + nA)*db + nB.
ComplexMatrix promote_atom_field(const ComplexMatrix& u, Index da, Index db,
                                 bool on_first_field) {
  const Index total = 2 * da * db;
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  if (on_first_field) {
    for (Index a = 0; a < 2; ++a)
      for (Index ap = 0; ap < 2; ++ap)
        for (Index na = 0; na < da; ++na)
          for (Index nap = 0; nap < da; ++nap) {
            const Complex v = u(a * da + na, ap * da + nap);
            if (v == Complex{0.0}) continue;
            for (Index nb = 0; nb < db; ++nb)
              out((a * da + na) * db + nb, (ap * da + nap) * db + nb) = v;
          }
  } else {
    for (Index a = 0; a < 2; ++a)
      for (Index ap = 0; ap < 2; ++ap)
        for (Index nb = 0; nb < db; ++nb)
          for (Index nbp = 0; nbp < db; ++nbp) {
            const Complex v = u(a * db + nb, ap * db + nbp);
            if (v == Complex{0.0}) continue;
            for (Index na = 0; na < da; ++na)
              out((a * da + na) * db + nb, (ap * da + na) * db + nbp) = v;
          }
  }
  return out;
}

// <g| rho |g> over the layout {2, da, db}: the lower-right atom block.
ComplexMatrix project_ground(const ComplexMatrix& rho, Index da, Index db) {
  const Index d = da * db;
  return rho.block(d, d, d, d);
}

SchemeOutcome finish_outcome(ComplexMatrix cav, Index da, Index db, BellKind target,
                             double fidelity_closed_form_or_nan, bool use_closed_fidelity) {
  const double success = cav.trace().real();
  if (!(success > 0.0))
    throw invariant_error("run_scheme: post-selected state has zero probability");
  cav /= success;
  DensityMatrix state{std::move(cav), HilbertLayout{da, db}};
  state.validate();
  const double fidelity =
      use_closed_fidelity ? fidelity_closed_form_or_nan
                          : state_fidelity(state, embed_qubit_pair(bell_state(target), da, db));
  const double e_n = log_negativity(state, 0).log_negativity;
  return {std::move(state), success, fidelity, target, e_n};
}

SchemeOutcome run_pure(const SchemeConfig& config) {
  const Index n = config.n_max;
  const AtomState atom = config.scheme == Scheme::BrownePlenio ? AtomState::excited()
                                                               : AtomState::ground();
  const FieldState field_a = config.scheme == Scheme::BrownePlenio ? fock_field(0, n)
                                                                   : fock_field(1, n);
  const FieldState field_b = fock_field(0, n);
  TwoCavityState cav = general_two_cavity_state(atom, field_a, field_b,
                                                config.lambda_tau, config.lambda_tau_b());
  if (!(cav.success_probability > 0.0))
    throw invariant_error("run_scheme: post-selected state has zero probability");
  const ComplexVector normalized = cav.amplitudes / std::sqrt(cav.success_probability);
  const BellKind target = config.scheme == Scheme::BrownePlenio ? BellKind::PsiPlus
                                                                : BellKind::PsiMinus;
  const double fidelity = config.epsilon == 0.0
                              ? scheme_fidelity(config.scheme, config.lambda_tau)
                              : scheme_fidelity_unequal(config.scheme, config.lambda_tau,
                                                        config.epsilon);
  DensityMatrix state = DensityMatrix::from_pure(normalized, cav.layout);
  state.validate();
  const double e_n = log_negativity(state, 0).log_negativity;
  return {std::move(state), cav.success_probability, fidelity, target, e_n};
}

SchemeOutcome run_browne_plenio_thermal(const SchemeConfig& config) {
  // One extra ladder level holds the photon the excited atom can deposit on
  // top of the truncated thermal distribution.
  const Index d = config.thermal_n_max + 2;
  const DensityMatrix th_small =
      thermal_field(config.thermal, config.thermal_n_max, config.renormalize_thermal);
  ComplexMatrix th = ComplexMatrix::Zero(d, d);
  th.topLeftCorner(config.thermal_n_max + 1, config.thermal_n_max + 1) = th_small.matrix;

  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(0, 0) = 1.0;
  const ComplexMatrix rho0 = kron(excited, th);  // {2, d}

  const ComplexMatrix u = resonant_propagator(config.lambda_tau, d - 1);
  const ComplexMatrix rho1 = u * rho0 * u.adjoint();

  // Tensor in the thermal state of cavity B: {2, d} -> {2, d, d}.
  const Index total = 2 * d * d;
  ComplexMatrix rho2 = ComplexMatrix::Zero(total, total);
  for (Index a = 0; a < 2; ++a)
    for (Index ap = 0; ap < 2; ++ap)
      for (Index na = 0; na < d; ++na)
        for (Index nap = 0; nap < d; ++nap) {
          const Complex v = rho1(a * d + na, ap * d + nap);
          if (v == Complex{0.0}) continue;
          for (Index nb = 0; nb < d; ++nb)
            rho2((a * d + na) * d + nb, (ap * d + nap) * d + nb) += v * th(nb, nb);
        }

  const ComplexMatrix ub =
      promote_atom_field(resonant_propagator(config.lambda_tau_b(), d - 1), d, d, false);
  rho2 = ub * rho2 * ub.adjoint();
  return finish_outcome(project_ground(rho2, d, d), d, d, BellKind::PsiPlus, 0.0, false);
}

SchemeOutcome run_single_photon_thermal(const SchemeConfig& config) {
  // Reachable levels: cavity A {0,1,2}, cavity B {0,1}.
  const Index da = 3;
  const Index db = 2;
  ComplexMatrix proj_a = ComplexMatrix::Zero(da, da);
  proj_a(1, 1) = 1.0;
  ComplexMatrix proj_b = ComplexMatrix::Zero(db, db);
  proj_b(0, 0) = 1.0;
  const ComplexMatrix rho0 = kron(kron(thermal_atom(config.thermal).matrix, proj_a), proj_b);

  const ComplexMatrix ua =
      promote_atom_field(resonant_propagator(config.lambda_tau, da - 1), da, db, true);
  const ComplexMatrix ub =
      promote_atom_field(resonant_propagator(config.lambda_tau_b(), db - 1), da, db, false);
  const ComplexMatrix rho = ub * (ua * rho0 * ua.adjoint()) * ub.adjoint();
  return finish_outcome(project_ground(rho, da, db), da, db, BellKind::PsiMinus, 0.0, false);
}

}  // namespace

void SchemeConfig::validate() const {
  if (n_max < 1) throw std::invalid_argument("SchemeConfig: n_max must be >= 1");
  if (thermal_n_max < 1)
    throw std::invalid_argument("SchemeConfig: thermal_n_max must be >= 1");
  if (epsilon >= 1.0) throw std::invalid_argument("SchemeConfig: epsilon must be < 1");
  if (thermal_target == ThermalTarget::Atom && scheme == Scheme::BrownePlenio)
    throw std::invalid_argument(
        "SchemeConfig: the Browne-Plenio scheme admits thermal cavities, not a thermal atom");
  if (thermal_target == ThermalTarget::Cavities && scheme == Scheme::SinglePhoton)
    throw std::invalid_argument(
        "SchemeConfig: the single-photon scheme admits a thermal atom, not thermal cavities");
}

TwoCavityState general_two_cavity_state(const AtomState& atom, const FieldState& field_a,
                                        const FieldState& field_b, double lambda_tau_a,
                                        double lambda_tau_b) {
  if (std::abs(atom.norm_sq() - 1.0) > 1e-9)
    throw std::invalid_argument("general_two_cavity_state: atom state not normalized");
  const Index da = field_a.coefficients.size();
  const Index db = field_b.coefficients.size();
  auto ca = [&](Index n) -> Complex {
    return (n >= 0 && n < da) ? field_a.coefficients(n) : Complex{0.0};
  };
  auto cb = [&](Index m) -> Complex {
    return (m >= 0 && m < db) ? field_b.coefficients(m) : Complex{0.0};
  };
  auto omega_a = [&](Index n) { return lambda_tau_a * std::sqrt(static_cast<double>(n)); };
  auto omega_b = [&](Index m) { return lambda_tau_b * std::sqrt(static_cast<double>(m)); };

  ComplexVector amp(da * db);
  for (Index n = 0; n < da; ++n)
    for (Index m = 0; m < db; ++m) {
      amp(n * db + m) =
          kI * atom.c_e * ca(n) * cb(m - 1) * std::cos(omega_a(n + 1)) * std::sin(omega_b(m)) +
          atom.c_g * ca(n + 1) * cb(m - 1) * std::sin(omega_a(n + 1)) * std::sin(omega_b(m)) +
          kI * atom.c_e * ca(n - 1) * cb(m) * std::sin(omega_a(n)) * std::cos(omega_b(m)) -
          atom.c_g * ca(n) * cb(m) * std::cos(omega_a(n)) * std::cos(omega_b(m));
    }
  const double success = amp.squaredNorm();
  return {std::move(amp), HilbertLayout{da, db}, success};
}

double scheme_fidelity(Scheme s, double lambda_tau) {
  const double c = std::cos(lambda_tau);
  if (s == Scheme::BrownePlenio) return 0.5 + c / (c * c + 1.0);
  const double s2 = std::sin(2.0 * lambda_tau);
  return 0.5 + s2 * s2 / (std::cos(4.0 * lambda_tau) + 3.0);
}

double scheme_success_probability(Scheme s, double lambda_tau) {
  if (s == Scheme::BrownePlenio) {
    const double c = std::cos(lambda_tau);
    return 1.0 - c * c * c * c;
  }
  const double s2 = std::sin(2.0 * lambda_tau);
  return 1.0 - 0.25 * s2 * s2;
}

double scheme_fidelity_unequal(Scheme s, double lambda_tau, double epsilon) {
  if (epsilon >= 1.0)
    throw std::invalid_argument("scheme_fidelity_unequal: epsilon must be < 1");
  if (epsilon == 0.0) return scheme_fidelity(s, lambda_tau);
  const double tb = lambda_tau * (1.0 - epsilon);
  if (s == Scheme::BrownePlenio) {
    const double c = std::cos(lambda_tau);
    const double sn = std::sin(lambda_tau);
    const double sb = std::sin(tb);
    return 0.5 + c * sn * sb / (c * c * sb * sb + sn * sn);
  }
  const double s2a = std::sin(2.0 * lambda_tau);
  const double s2b = std::sin(2.0 * tb);
  const double c2a = std::cos(2.0 * lambda_tau);
  const double c2b = std::cos(2.0 * tb);
  return 0.5 + s2a * s2b / (2.0 * c2a * c2b + 2.0);
}

double single_photon_prep_probability(double lambda_tau) {
  const double s = std::sin(lambda_tau);
  return s * s;
}

std::vector<double> ideal_interaction_times(int branches) {
  const double t0 = std::atan(std::sqrt(std::sqrt(5.0) - 2.0));
  const double pi = std::acos(-1.0);
  std::vector<double> roots;
  for (int n = 0; n <= branches; ++n) {
    if (n >= 1) roots.push_back(2.0 * (pi * n - t0));
    roots.push_back(2.0 * (pi * n + t0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double lowest_ideal_interaction_time() { return ideal_interaction_times(0).front(); }

SchemeOutcome run_scheme(const SchemeConfig& config) {
  config.validate();
  if (config.thermal_target == ThermalTarget::None) return run_pure(config);
  if (config.scheme == Scheme::BrownePlenio) return run_browne_plenio_thermal(config);
  return run_single_photon_thermal(config);
}

}  // namespace cavsim
