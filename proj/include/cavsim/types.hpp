#ifndef CAVSIM_TYPES_HPP
#define CAVSIM_TYPES_HPP

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cavsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Shared numeric tolerances.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueClampTol = 1e-10;

// Thrown when a computed quantity violates a physical invariant
// (non-Hermitian density matrix, spectrum negative beyond rounding, ...).
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered subsystem dimensions of a tensor-product space.  Composite indices
// are row-major: for dims {d0, d1, d2} the ket |i0,i1,i2> has flat index
// (i0*d1 + i1)*d2 + i2.  The atom, when present, always comes first, with the
// atomic basis ordered {|e>, |g>}.
class HilbertLayout {
 public:
  HilbertLayout() = default;
  HilbertLayout(std::initializer_list<Index> dims)
      : HilbertLayout(std::vector<Index>(dims)) {}
  explicit HilbertLayout(std::vector<Index> dims);

  Index subsystems() const { return static_cast<Index>(dims_.size()); }
  Index dim(Index k) const { return dims_.at(static_cast<std::size_t>(k)); }
  Index total_dim() const;
  const std::vector<Index>& dims() const { return dims_; }

  Index flatten(const std::vector<Index>& indices) const;
  std::vector<Index> unflatten(Index flat) const;

 private:
  std::vector<Index> dims_;
};

struct DensityMatrix {
  ComplexMatrix matrix;
  HilbertLayout layout;

  double trace() const { return matrix.trace().real(); }

  // Hermitian within tol, unit trace within tol, smallest eigenvalue >= -tol.
  void validate(double tol = kHermitianTol) const;

  static DensityMatrix from_pure(const ComplexVector& state, HilbertLayout layout);
};

}  // namespace cavsim

#endif  // CAVSIM_TYPES_HPP
