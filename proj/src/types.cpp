#include "cavsim/types.hpp"

#include <Eigen/Eigenvalues>

namespace cavsim {

HilbertLayout::HilbertLayout(std::vector<Index> dims) : dims_(std::move(dims)) {
  for (Index d : dims_)
    if (d < 1) throw std::invalid_argument("HilbertLayout: every dim must be >= 1");
}

Index HilbertLayout::total_dim() const {
  Index d = 1;
  for (Index dim : dims_) d *= dim;
  return d;
}

Index HilbertLayout::flatten(const std::vector<Index>& indices) const {
  if (indices.size() != dims_.size())
    throw std::invalid_argument("HilbertLayout::flatten: index count mismatch");
  Index flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= dims_[k])
      throw std::invalid_argument("HilbertLayout::flatten: index out of range");
    flat = flat * dims_[k] + indices[k];
  }
  return flat;
}

std::vector<Index> HilbertLayout::unflatten(Index flat) const {
  std::vector<Index> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return out;
}

void DensityMatrix::validate(double tol) const {
  if (matrix.rows() != matrix.cols())
    throw invariant_error("DensityMatrix: matrix not square");
  if (layout.total_dim() != matrix.rows())
    throw invariant_error("DensityMatrix: layout does not match matrix dimension");
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol)
    throw invariant_error("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(matrix.trace().real() - 1.0) > tol || std::abs(matrix.trace().imag()) > tol)
    throw invariant_error("DensityMatrix: trace not 1 within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw invariant_error("DensityMatrix: eigensolver failed");
  if (solver.eigenvalues().minCoeff() < -tol)
    throw invariant_error("DensityMatrix: negative eigenvalue beyond tolerance");
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& state, HilbertLayout layout) {
  if (layout.total_dim() != state.size())
    throw std::invalid_argument("DensityMatrix::from_pure: layout/state size mismatch");
  return {state * state.adjoint(), std::move(layout)};
}

}  // namespace cavsim
