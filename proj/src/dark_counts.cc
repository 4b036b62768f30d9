#include "eplink/dark_counts.h"

#include "eplink/errors.h"
#include "eplink/format.h"

namespace eplink {

DarkCountParams::DarkCountParams(double p_dc) : p_dc_(p_dc) {
  if (!(p_dc >= 0.0 && p_dc <= 1.0)) throw InvalidInput("dark-count probability " + format_double(p_dc) + " outside [0, 1]");
}

DensityMatrix apply_ep_dc(const ErasurePauliChannel& ch, const DarkCountParams& dc, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw InvalidInput("apply_ep_dc: input must be a qubit state, got dimension " + std::to_string(rho.dim()));
  const double loss = 1.0 - ch.eta();
  Matrix block = ch.eta() * pauli_map(ch.dist(), rho.matrix()) + (loss * dc.p_dc() * 0.5) * Matrix::identity(2);
  Matrix out = embed_polarization(block);
  out(kFlagIndex, kFlagIndex) = loss * (1.0 - dc.p_dc());
  return DensityMatrix(std::move(out));
}

double effective_transmissivity(double eta, double p_dc) { return eta + (1.0 - eta) * p_dc; }

ErasurePauliChannel effective_channel(const ErasurePauliChannel& ch, const DarkCountParams& dc) {
  const double eta_prime = effective_transmissivity(ch.eta(), dc.p_dc());
  if (eta_prime == 0.0) return ErasurePauliChannel::complete_erasure();
  const double r = ch.eta() / eta_prime;
  std::array<double, 4> p{};
  for (std::size_t k = 0; k < 4; ++k) p[k] = r * ch.dist()[k] + (1.0 - r) / 4.0;
  return {eta_prime, PauliDistribution(p)};
}

DensityMatrix click_conditioned(const ErasurePauliChannel& ch, const DarkCountParams& dc, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw InvalidInput("click_conditioned: input must be a qubit state");
  const double click = effective_transmissivity(ch.eta(), dc.p_dc());
  if (!(click > 0.0)) throw UndefinedConditioning("click probability is zero (eta = 0 and p_dc = 0)");
  Matrix block = ch.eta() * pauli_map(ch.dist(), rho.matrix()) +
                 ((1.0 - ch.eta()) * dc.p_dc() * 0.5) * Matrix::identity(2);
  return DensityMatrix((1.0 / click) * block);
}

CapacityBounds dephasing_with_dc_bounds(double eta, double p, double p_dc) {
  const ErasurePauliChannel ch(eta, PauliDistribution::dephasing(p));
  return capacity_bounds(effective_channel(ch, DarkCountParams(p_dc)));
}

}  // namespace eplink
