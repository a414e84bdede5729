#include "cavsim/tensor.hpp"

#include <Eigen/Eigenvalues>

namespace cavsim {

namespace {

// Strides of the row-major composite index.
std::vector<Index> strides_of(const std::vector<Index>& dims) {
  std::vector<Index> strides(dims.size(), 1);
  for (std::size_t k = dims.size() - 1; k-- > 0;)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, Index keep) {
  const auto& dims = rho.layout.dims();
  if (keep < 0 || keep >= rho.layout.subsystems())
    throw std::invalid_argument("partial_trace: subsystem index out of range");
  if (rho.layout.total_dim() != rho.matrix.rows() || rho.matrix.rows() != rho.matrix.cols())
    throw std::invalid_argument("partial_trace: layout/matrix dimension mismatch");

  const auto strides = strides_of(dims);
  const Index dk = dims[static_cast<std::size_t>(keep)];
  const Index stride_k = strides[static_cast<std::size_t>(keep)];

  // Offsets of every environment configuration with the kept index at zero.
  Index env_count = rho.layout.total_dim() / dk;
  std::vector<Index> base(static_cast<std::size_t>(env_count));
  {
    std::vector<Index> idx(dims.size(), 0);
    for (Index e = 0; e < env_count; ++e) {
      Index flat = 0;
      for (std::size_t s = 0; s < dims.size(); ++s) flat += idx[s] * strides[s];
      base[static_cast<std::size_t>(e)] = flat;
      // odometer over all subsystems except `keep`
      for (std::size_t s = dims.size(); s-- > 0;) {
        if (static_cast<Index>(s) == keep) continue;
        if (++idx[s] < dims[s]) break;
        idx[s] = 0;
      }
    }
  }

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i)
    for (Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Index e = 0; e < env_count; ++e) {
        const Index b = base[static_cast<std::size_t>(e)];
        acc += rho.matrix(b + i * stride_k, b + j * stride_k);
      }
      out(i, j) = acc;
    }
  return {std::move(out), HilbertLayout{dk}};
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Index sub) {
  const auto& dims = rho.layout.dims();
  if (sub < 0 || sub >= rho.layout.subsystems())
    throw std::invalid_argument("partial_transpose: subsystem index out of range");
  if (rho.layout.total_dim() != rho.matrix.rows() || rho.matrix.rows() != rho.matrix.cols())
    throw std::invalid_argument("partial_transpose: layout/matrix dimension mismatch");

  const auto strides = strides_of(dims);
  const Index ds = dims[static_cast<std::size_t>(sub)];
  const Index stride_s = strides[static_cast<std::size_t>(sub)];

  ComplexMatrix out(rho.matrix.rows(), rho.matrix.cols());
  const Index total = rho.layout.total_dim();
  for (Index r = 0; r < total; ++r) {
    const Index rs = (r / stride_s) % ds;
    for (Index c = 0; c < total; ++c) {
      const Index cs = (c / stride_s) % ds;
      const Index rp = r + (cs - rs) * stride_s;
      const Index cp = c + (rs - cs) * stride_s;
      out(rp, cp) = rho.matrix(r, c);
    }
  }
  return out;
}

Eigensystem herm_eig(const ComplexMatrix& m, double hermitian_tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("herm_eig: matrix not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol)
    throw std::invalid_argument("herm_eig: matrix not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw invariant_error("herm_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace cavsim
