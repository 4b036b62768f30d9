#include "eplink/erasure_pauli.h"

#include <algorithm>
#include <cmath>

#include "eplink/errors.h"
#include "eplink/format.h"

namespace eplink {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput(std::string(name) + " = " + format_double(x) + " outside [0, 1]");
}

Matrix flag_projector() {
  Matrix e(kOutputDim);
  e(kFlagIndex, kFlagIndex) = 1.0;
  return e;
}

}  // namespace

ErasurePauliChannel::ErasurePauliChannel(double eta, PauliDistribution dist) : eta_(eta), dist_(dist) {
  require_unit_interval(eta, "transmissivity");
}

Matrix embed_polarization(const Matrix& block) {
  if (block.dim() != 2) throw InvalidInput("embed_polarization expects a 2x2 block");
  Matrix out(kOutputDim);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = block(r, c);
  }
  return out;
}

Matrix embed_two_qubit(const Matrix& m) {
  if (m.dim() != 4) throw InvalidInput("embed_two_qubit expects a 4x4 operator");
  Matrix out(2 * kOutputDim);
  for (std::size_t ra = 0; ra < 2; ++ra) {
    for (std::size_t rb = 0; rb < 2; ++rb) {
      for (std::size_t ca = 0; ca < 2; ++ca) {
        for (std::size_t cb = 0; cb < 2; ++cb) out(ra * kOutputDim + rb, ca * kOutputDim + cb) = m(ra * 2 + rb, ca * 2 + cb);
      }
    }
  }
  return out;
}

DensityMatrix apply_ep(const ErasurePauliChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw InvalidInput("apply_ep: input must be a qubit state, got dimension " + std::to_string(rho.dim()));
  Matrix out = ch.eta() * embed_polarization(pauli_map(ch.dist(), rho.matrix()));
  out(kFlagIndex, kFlagIndex) = 1.0 - ch.eta();
  return DensityMatrix(std::move(out));
}

DensityMatrix choi_ep(const ErasurePauliChannel& ch) {
  const Matrix tau_e = kron(0.5 * Matrix::identity(2), flag_projector());
  return DensityMatrix((1.0 - ch.eta()) * tau_e + ch.eta() * embed_two_qubit(choi_state(ch.dist()).matrix()));
}

CapacityBounds capacity_bounds(const ErasurePauliChannel& ch) {
  const double lower = ch.eta() * std::max(0.0, 1.0 - shannon_entropy(ch.dist()));
  // The hashing rate never exceeds Phi mathematically; the min only absorbs
  // rounding when both are equal (pure dephasing).
  const double upper = ch.eta() * phi_upper(ch.dist());
  const double lo = std::min(lower, upper);
  return {lo, upper, std::abs(upper - lo) < kExactTolerance};
}

double capacity_edp_upper(double eta, double p) {
  require_unit_interval(eta, "transmissivity");
  require_unit_interval(p, "depolarizing probability");
  if (p > 2.0 / 3.0) return 0.0;
  return eta * (1.0 - binary_entropy(0.75 * p));
}

double capacity_edh(double eta, double p) {
  require_unit_interval(eta, "transmissivity");
  require_unit_interval(p, "dephasing probability");
  const double q = p > 0.5 ? 1.0 - p : p;
  return eta * (1.0 - binary_entropy(q));
}

bool is_zero_capacity(const ErasurePauliChannel& ch) { return ch.eta() == 0.0 || ch.dist().max() <= 0.5; }

std::array<EnsembleComponent, 2> ensemble_decomposition(const ErasurePauliChannel& ch) {
  return {EnsembleComponent{ch.eta(), ComponentKind::Pauli, ch.dist()},
          EnsembleComponent{1.0 - ch.eta(), ComponentKind::CompleteErasure, PauliDistribution::identity()}};
}

Matrix apply_component(const EnsembleComponent& component, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw InvalidInput("apply_component: input must be a qubit state");
  switch (component.kind) {
    case ComponentKind::Pauli:
      return embed_polarization(pauli_map(component.dist, rho.matrix()));
    case ComponentKind::CompleteErasure:
      return flag_projector();
  }
  return Matrix(kOutputDim);
}

}  // namespace eplink
