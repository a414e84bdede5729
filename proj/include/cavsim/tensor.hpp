#ifndef CAVSIM_TENSOR_HPP
#define CAVSIM_TENSOR_HPP

#include "cavsim/types.hpp"

namespace cavsim {

// Kronecker product with the index law
//   out(i*b.rows()+k, j*b.cols()+l) = a(i,j) * b(k,l).
// Accepts arbitrary Eigen expressions on both sides.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<
      typename DerivedA::Scalar, typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
  return out;
}

// Reduced state of subsystem `keep`; every other subsystem is traced out.
// Throws std::invalid_argument when keep is out of range.
DensityMatrix partial_trace(const DensityMatrix& rho, Index keep);

// Transposition of the indices of subsystem `sub`.  Involutive and
// trace/Hermiticity preserving.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Index sub);

struct Eigensystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns, unitary
};

// Spectral decomposition of a Hermitian matrix.  Throws std::invalid_argument
// when max|m - m^dagger| exceeds hermitian_tol.
Eigensystem herm_eig(const ComplexMatrix& m, double hermitian_tol = kHermitianTol);

}  // namespace cavsim

#endif  // CAVSIM_TENSOR_HPP
