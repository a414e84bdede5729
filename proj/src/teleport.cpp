#include "cavsim/teleport.hpp"

#include <cmath>
#include <limits>

#include "cavsim/jcm.hpp"

namespace cavsim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Bell coefficients over (A, C): |bell> = sum_i gamma[i] |i>_A |pair(i)>_C,
// pair(i) = 1-i for Psi+-, pair(i) = i for Phi+-.  Outcome order A..D is
// Psi-, Phi-, Phi+, Psi+.
struct BellPattern {
  double gamma0;
  double gamma1;
  bool flipped;  // true when C pairs with 1-i
};

constexpr double kInvSqrt2 = 0.70710678118654752440;

BellPattern pattern_for(int outcome) {
  switch (outcome) {
    case 0: return {kInvSqrt2, -kInvSqrt2, true};   // Psi-
    case 1: return {kInvSqrt2, -kInvSqrt2, false};  // Phi-
    case 2: return {kInvSqrt2, kInvSqrt2, false};   // Phi+
    default: return {kInvSqrt2, kInvSqrt2, true};   // Psi+
  }
}

ComplexMatrix correction_for(int outcome) {
  switch (outcome) {
    case 0: return ComplexMatrix::Identity(2, 2);
    case 1: return sigma_x();
    case 2: return Complex{0.0, 1.0} * sigma_y();
    default: return sigma_z();
  }
}

}  // namespace

TeleportReport teleport(const TeleportInput& input) {
  if (std::abs(std::norm(input.a) + std::norm(input.b) - 1.0) > 1e-12)
    throw std::invalid_argument("teleport: input qubit not normalized");
  if (input.resource.layout.subsystems() != 2)
    throw std::invalid_argument("teleport: resource must be bipartite");
  const Index da = input.resource.layout.dim(0);
  const Index db = input.resource.layout.dim(1);
  if (da < 2 || db < 2)
    throw std::invalid_argument("teleport: resource subsystems must have dim >= 2");

  // Restrict the resource to the qubit (x) qubit block and renormalize.  The
  // Bell projectors annihilate everything outside it, so the per-outcome
  // fidelities do not depend on this step; the probabilities do.
  ComplexMatrix block(4, 4);
  for (Index ia = 0; ia < 2; ++ia)
    for (Index ib = 0; ib < 2; ++ib)
      for (Index ja = 0; ja < 2; ++ja)
        for (Index jb = 0; jb < 2; ++jb)
          block(ia * 2 + ib, ja * 2 + jb) =
              input.resource.matrix(ia * db + ib, ja * db + jb);
  const double block_trace = block.trace().real();
  if (!(block_trace > 0.0))
    throw invariant_error("teleport: resource has no weight on the qubit block");
  block /= block_trace;
  const double discarded = 1.0 - block_trace / input.resource.trace();

  const Complex psi[2] = {input.a, input.b};
  TeleportReport report{};
  report.discarded_weight = discarded;

  for (int outcome = 0; outcome < 4; ++outcome) {
    const BellPattern bell = pattern_for(outcome);
    const double gamma[2] = {bell.gamma0, bell.gamma1};
    auto c_of = [&](Index i) { return bell.flipped ? 1 - i : i; };

    // rho_B[n,n'] = sum_{i,j} gamma_i gamma_j rho[(i,n),(j,n')] psi_{c(i)} conj(psi_{c(j)})
    ComplexMatrix rho_b = ComplexMatrix::Zero(2, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) {
        const Complex w = gamma[i] * gamma[j] * psi[c_of(i)] * std::conj(psi[c_of(j)]);
        if (w == Complex{0.0}) continue;
        for (Index n = 0; n < 2; ++n)
          for (Index np = 0; np < 2; ++np)
            rho_b(n, np) += w * block(i * 2 + n, j * 2 + np);
      }

    const double prob = rho_b.trace().real();
    report.probability[outcome] = prob;
    if (prob < 1e-15) {
      report.fidelity[outcome] = kNan;
      continue;
    }
    const ComplexMatrix k = correction_for(outcome);
    const ComplexMatrix corrected = k * rho_b * k.adjoint();
    Complex f = 0.0;
    for (Index n = 0; n < 2; ++n)
      for (Index np = 0; np < 2; ++np)
        f += std::conj(psi[n]) * corrected(n, np) * psi[np];
    report.fidelity[outcome] = f.real() / prob;
  }
  return report;
}

double teleport_fidelity_closed_form(TeleportOutcome which, Complex a, Complex b,
                                     double lambda_tau, const ThermalParams& thermal) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
    throw std::invalid_argument("teleport_fidelity_closed_form: qubit not normalized");
  const auto w = atom_thermal_weights(thermal);
  const double c1 = std::cos(lambda_tau);
  const double s1 = std::sin(lambda_tau);
  const double c2 = std::cos(lambda_tau * std::sqrt(2.0));
  const double a2 = std::norm(a);
  const double b2 = std::norm(b);
  const double c1sq = c1 * c1;
  const double s1q = s1 * s1 * s1 * s1;
  const double cross = 2.0 * a2 * b2 * c1 * s1 * s1;
  const double thermal_term = w.p_e * a2 * b2 * c2 * c2 * s1 * s1;

  double num;
  double den;
  if (which == TeleportOutcome::A || which == TeleportOutcome::D) {
    num = w.p_g * (a2 * a2 * c1sq + cross + b2 * b2 * s1q) + thermal_term;
    den = a2 * c1sq + b2 * s1q;
  } else {
    num = w.p_g * (a2 * a2 * s1q + cross + b2 * b2 * c1sq) + thermal_term;
    den = a2 * s1q + b2 * c1sq;
  }
  // below this the ratio is pure rounding noise (the exact denominator is 0)
  if (den <= 1e-30) return kNan;
  return num / den;
}

PurificationBound purification_bound(double target_pairs, double e_n) {
  if (target_pairs < 0.0)
    throw std::invalid_argument("purification_bound: target_pairs must be >= 0");
  if (e_n <= 0.0)
    return {target_pairs, e_n, std::numeric_limits<double>::infinity(), false};
  return {target_pairs, e_n, target_pairs / e_n, true};
}

}  // namespace cavsim
