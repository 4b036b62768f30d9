#pragma once

#include <cstddef>
#include <span>

#include "eplink/linalg.h"

namespace eplink {

inline constexpr double kStateTolerance = 1e-10;

/// A validated quantum state: Hermitian, unit trace and positive
/// semidefinite, each within kStateTolerance.
class DensityMatrix {
 public:
  /// Throws InvalidInput if any invariant fails.
  explicit DensityMatrix(Matrix m);

  /// |psi><psi| after normalizing psi.
  static DensityMatrix from_ket(std::span<const Complex> psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

 private:
  Matrix m_;
};

}  // namespace eplink
