#include "eplink/pauli.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eplink/errors.h"
#include "eplink/format.h"

namespace eplink {

namespace {

constexpr double kSumTolerance = 1e-9;
const Complex kI{0.0, 1.0};

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void require_qubit(const Matrix& m, const char* what) {
  if (m.dim() != 2) throw InvalidInput(std::string(what) + ": expected a 2x2 operator, got dimension " + std::to_string(m.dim()));
}

}  // namespace

const Matrix& pauli_matrix(Pauli p) {
  static const std::array<Matrix, 4> kMatrices = {
      Matrix(2, {1.0, 0.0, 0.0, 1.0}),
      Matrix(2, {0.0, 1.0, 1.0, 0.0}),
      Matrix(2, {0.0, -kI, kI, 0.0}),
      Matrix(2, {1.0, 0.0, 0.0, -1.0}),
  };
  return kMatrices[static_cast<std::size_t>(p)];
}

PauliDistribution::PauliDistribution(std::array<double, 4> probs) : p_(probs) {
  for (double x : p_) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("Pauli probability " + format_double(x) + " outside [0, 1]");
  }
  const double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidInput("Pauli probabilities sum to " + format_double(sum) + ", expected 1");
  }
  for (double& x : p_) x /= sum;
}

PauliDistribution PauliDistribution::isotropic(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("depolarizing probability " + format_double(p) + " outside [0, 1]");
  const double q = p / 4.0;
  return PauliDistribution({1.0 - 3.0 * q, q, q, q});
}

PauliDistribution PauliDistribution::dephasing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("dephasing probability " + format_double(p) + " outside [0, 1]");
  return PauliDistribution({1.0 - p, 0.0, 0.0, p});
}

double PauliDistribution::max() const { return *std::max_element(p_.begin(), p_.end()); }

Matrix pauli_map(const PauliDistribution& dist, const Matrix& m) {
  require_qubit(m, "pauli_map");
  Matrix out(2);
  for (Pauli k : kPaulis) {
    if (dist[k] == 0.0) continue;
    const Matrix& p = pauli_matrix(k);
    out += dist[k] * (p * m * p.adjoint());
  }
  return out;
}

DensityMatrix apply_pauli(const PauliDistribution& dist, const DensityMatrix& rho) {
  require_qubit(rho.matrix(), "apply_pauli");
  return DensityMatrix(pauli_map(dist, rho.matrix()));
}

DensityMatrix choi_state(const PauliDistribution& dist) {
  // sigma = 1/2 sum_ij |i><j| (x) P(|i><j|)
  Matrix sigma(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix unit(2);
      unit(i, j) = 1.0;
      sigma += 0.5 * kron(unit, pauli_map(dist, unit));
    }
  }
  return DensityMatrix(std::move(sigma));
}

double shannon_entropy(const PauliDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probs()) h += plogp(p);
  return h;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("binary entropy argument " + format_double(x) + " outside [0, 1]");
  return plogp(x) + plogp(1.0 - x);
}

double phi_upper(const PauliDistribution& dist) {
  const double p_max = dist.max();
  return p_max >= 0.5 ? 1.0 - binary_entropy(p_max) : 0.0;
}

NptWitness npt_witness(const PauliDistribution& dist) {
  const Matrix pt = partial_transpose_second(choi_state(dist).matrix(), 2, 2);
  const double lo = hermitian_eigenvalues(pt).front();
  return {lo < -kNptThreshold, lo};
}

}  // namespace eplink
