#ifndef CAVSIM_TESTS_HELPERS_HPP
#define CAVSIM_TESTS_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "cavsim/jcm.hpp"
#include "cavsim/types.hpp"

namespace cavtest {

using namespace cavsim;

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline Complex random_complex(std::mt19937& gen) {
  std::normal_distribution<double> normal;
  return {normal(gen), normal(gen)};
}

inline ComplexMatrix random_matrix(Index rows, Index cols, std::mt19937& gen) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_complex(gen);
  return m;
}

// Ginibre construction: G G^dag / tr, always a valid density matrix.
inline ComplexMatrix random_density(Index dim, std::mt19937& gen) {
  const ComplexMatrix g = random_matrix(dim, dim, gen);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

inline ComplexVector random_state(Index dim, std::mt19937& gen) {
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = random_complex(gen);
  v /= v.norm();
  return v;
}

// Max componentwise distance after aligning the global phase of u to v on
// v's largest component.
inline double phase_aligned_distance(const ComplexVector& u, const ComplexVector& v) {
  Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  const Complex ratio = v(k) * std::conj(u(k));
  const double mag = std::abs(ratio);
  const Complex phase = mag > 0.0 ? ratio / mag : Complex{1.0};
  return (phase * u - v).cwiseAbs().maxCoeff();
}

// Independent reference partial trace: keeps subsystem `keep` of `dims` by the
// explicit double sum over all other indices.
inline ComplexMatrix partial_trace_reference(const ComplexMatrix& rho,
                                             const std::vector<Index>& dims, Index keep) {
  std::vector<Index> strides(dims.size(), 1);
  for (std::size_t k = dims.size() - 1; k-- > 0;) strides[k] = strides[k + 1] * dims[k + 1];
  const Index dk = dims[static_cast<std::size_t>(keep)];
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  const Index total = rho.rows();
  for (Index r = 0; r < total; ++r)
    for (Index c = 0; c < total; ++c) {
      bool same_env = true;
      for (std::size_t s = 0; s < dims.size(); ++s) {
        if (static_cast<Index>(s) == keep) continue;
        if ((r / strides[s]) % dims[s] != (c / strides[s]) % dims[s]) {
          same_env = false;
          break;
        }
      }
      if (!same_env) continue;
      const auto sk = strides[static_cast<std::size_t>(keep)];
      out((r / sk) % dk, (c / sk) % dk) += rho(r, c);
    }
  return out;
}

// Reference two-cavity run: the atom crosses A then B as two propagator
// applications on the joint space, then the |g> component is read off.
// Returns the unnormalized post-measurement state over A (x) B and fills
// prob_g with the measurement probability.
inline ComplexVector two_step_ground_projection(const AtomState& atom,
                                                const FieldState& field_a,
                                                const FieldState& field_b, double lt_a,
                                                double lt_b, double* prob_g) {
  const Index da = field_a.coefficients.size();
  const Index db = field_b.coefficients.size();
  auto idx = [&](Index a, Index na, Index nb) { return (a * da + na) * db + nb; };

  ComplexVector psi(2 * da * db);
  for (Index a = 0; a < 2; ++a)
    for (Index na = 0; na < da; ++na)
      for (Index nb = 0; nb < db; ++nb)
        psi(idx(a, na, nb)) = (a == 0 ? atom.c_e : atom.c_g) * field_a.coefficients(na) *
                              field_b.coefficients(nb);

  const ComplexMatrix ua = resonant_propagator(lt_a, da - 1);
  ComplexVector next = ComplexVector::Zero(psi.size());
  for (Index a = 0; a < 2; ++a)
    for (Index na = 0; na < da; ++na)
      for (Index ap = 0; ap < 2; ++ap)
        for (Index nap = 0; nap < da; ++nap) {
          const Complex u = ua(a * da + na, ap * da + nap);
          if (u == Complex{0.0}) continue;
          for (Index nb = 0; nb < db; ++nb)
            next(idx(a, na, nb)) += u * psi(idx(ap, nap, nb));
        }
  psi.swap(next);

  const ComplexMatrix ub = resonant_propagator(lt_b, db - 1);
  next.setZero();
  for (Index a = 0; a < 2; ++a)
    for (Index nb = 0; nb < db; ++nb)
      for (Index ap = 0; ap < 2; ++ap)
        for (Index nbp = 0; nbp < db; ++nbp) {
          const Complex u = ub(a * db + nb, ap * db + nbp);
          if (u == Complex{0.0}) continue;
          for (Index na = 0; na < da; ++na)
            next(idx(a, na, nb)) += u * psi(idx(ap, na, nbp));
        }

  ComplexVector g(da * db);
  for (Index na = 0; na < da; ++na)
    for (Index nb = 0; nb < db; ++nb) g(na * db + nb) = next(idx(1, na, nb));
  if (prob_g) *prob_g = g.squaredNorm();
  return g;
}

// Bisection root finder for a continuous sign-changing function.
template <typename F>
double bisect(F f, double lo, double hi, double tol = 1e-14) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double pi() { return std::acos(-1.0); }

}  // namespace cavtest

#endif  // CAVSIM_TESTS_HELPERS_HPP
