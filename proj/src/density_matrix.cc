#include "eplink/density_matrix.h"

#include <cmath>
#include <string>

#include "eplink/errors.h"
#include "eplink/format.h"

namespace eplink {

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw InvalidInput("density matrix must have positive dimension");
  if (const double h = hermiticity_defect(m_); h > kStateTolerance) {
    throw InvalidInput("density matrix is not Hermitian (defect " + format_double(h, 3) + ")");
  }
  if (const double tr = m_.trace().real(); std::abs(tr - 1.0) > kStateTolerance) {
    throw InvalidInput("density matrix trace is " + format_double(tr) + ", expected 1");
  }
  if (const double lo = hermitian_eigenvalues(m_).front(); lo < -kStateTolerance) {
    throw InvalidInput("density matrix has negative eigenvalue " + format_double(lo, 3));
  }
}

DensityMatrix DensityMatrix::from_ket(std::span<const Complex> psi) {
  double norm2 = 0.0;
  for (const auto& z : psi) norm2 += std::norm(z);
  if (!(norm2 > 0.0)) throw InvalidInput("cannot build a state from the zero vector");
  return DensityMatrix((1.0 / norm2) * Matrix::outer(psi));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix((1.0 / static_cast<double>(dim)) * Matrix::identity(dim));
}

}  // namespace eplink
