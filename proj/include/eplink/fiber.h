#pragma once

#include <variant>

#include "eplink/erasure_pauli.h"

namespace eplink {

/// Isotropic PMD errors without polarization control. The decoherence length
/// is a free parameter; 50 m is a representative scale, not a measured value.
struct DepolarizingDominated {
  double decoherence_length_km = 0.05;
  double p_inf = 1.0;
};

/// Active polarization control: only Z errors remain, saturating at 1/2 with a
/// decoherence length fixed by the photon bandwidth and the PMD coefficient.
struct DephasingDominated {};

using PmdRegime = std::variant<DepolarizingDominated, DephasingDominated>;

/// Fiber description. Units: alpha in dB/km, bandwidth in GHz, PMD
/// coefficient in ps/sqrt(km), lengths in km.
class FiberParams {
 public:
  FiberParams(double alpha_db_per_km, double delta_nu_ghz, double d_pmd_ps_per_sqrt_km, PmdRegime regime);

  /// alpha = 0.2 dB/km, 100 GHz, 0.1 ps/sqrt(km), dephasing-dominated.
  static FiberParams standard_telecom();

  double alpha() const { return alpha_; }
  double delta_nu() const { return delta_nu_; }
  double d_pmd() const { return d_pmd_; }
  const PmdRegime& regime() const { return regime_; }
  bool dephasing_dominated() const { return std::holds_alternative<DephasingDominated>(regime_); }

  double decoherence_length_km() const;
  double p_inf() const;

 private:
  double alpha_;
  double delta_nu_;
  double d_pmd_;
  PmdRegime regime_;
};

/// 10^(-alpha d / 10).
double transmissivity(const FiberParams& params, double d_km);

/// (2 pi delta_nu)^-1 in ps.
double coherence_time_ps(double delta_nu_ghz);

/// 2 tau^2 / D_PMD^2 in km.
double dephasing_length_km(double delta_nu_ghz, double d_pmd_ps_per_sqrt_km);

/// p_inf (1 - exp(-d/L)).
double pauli_probability(const FiberParams& params, double d_km);

/// Distance at which the depolarizing probability reaches 2/3:
/// L ln(p_inf / (p_inf - 2/3)), infinite when p_inf <= 2/3.
double max_distance_depolarizing(double decoherence_length_km, double p_inf);

/// Pauli distribution of the fiber's regime for error probability p.
PauliDistribution regime_distribution(const FiberParams& params, double p);

ErasurePauliChannel channel_at_distance(const FiberParams& params, double d_km);

}  // namespace eplink
