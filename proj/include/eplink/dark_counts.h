#pragma once

#include "eplink/erasure_pauli.h"

namespace eplink {

/// Probability that the detector clicks in a window where no photon arrived.
class DarkCountParams {
 public:
  explicit DarkCountParams(double p_dc);
  static DarkCountParams none() { return DarkCountParams(0.0); }
  double p_dc() const { return p_dc_; }

 private:
  double p_dc_;
};

/// (1-eta)[(1-p_dc)|e><e| + p_dc I/2] + eta P(rho).
DensityMatrix apply_ep_dc(const ErasurePauliChannel& ch, const DarkCountParams& dc, const DensityMatrix& rho);

/// eta' = eta + (1-eta) p_dc.
double effective_transmissivity(double eta, double p_dc);

/// Equivalent erasure-Pauli channel: transmissivity eta' and distribution
/// p'_k = r p_k + (1-r)/4 with r = eta/eta'. When eta' = 0 the result is the
/// complete-erasure channel.
ErasurePauliChannel effective_channel(const ErasurePauliChannel& ch, const DarkCountParams& dc);

/// Qubit state conditioned on a detector click. Throws UndefinedConditioning
/// when the click probability is zero.
DensityMatrix click_conditioned(const ErasurePauliChannel& ch, const DarkCountParams& dc, const DensityMatrix& rho);

/// Bounds of the dephasing channel (1-p, 0, 0, p) after the dark-count
/// reparametrization: eta' max(0, 1 - H(p')) and eta' Phi(p').
CapacityBounds dephasing_with_dc_bounds(double eta, double p, double p_dc);

}  // namespace eplink
