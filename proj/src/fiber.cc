#include "eplink/fiber.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "eplink/errors.h"
#include "eplink/format.h"

namespace eplink {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput(std::string(name) + " must be positive and finite, got " + format_double(x));
}

void require_distance(double d_km) {
  if (!(d_km >= 0.0)) throw InvalidInput("distance must be nonnegative, got " + format_double(d_km));
}

void require_p_inf(double p_inf) {
  if (!(p_inf > 0.0 && p_inf <= 1.0)) throw InvalidInput("p_inf must lie in (0, 1], got " + format_double(p_inf));
}

}  // namespace

FiberParams::FiberParams(double alpha_db_per_km, double delta_nu_ghz, double d_pmd_ps_per_sqrt_km, PmdRegime regime)
    : alpha_(alpha_db_per_km), delta_nu_(delta_nu_ghz), d_pmd_(d_pmd_ps_per_sqrt_km), regime_(regime) {
  require_positive(alpha_, "alpha");
  require_positive(delta_nu_, "delta_nu");
  require_positive(d_pmd_, "d_pmd");
  if (const auto* depol = std::get_if<DepolarizingDominated>(&regime_)) {
    require_positive(depol->decoherence_length_km, "decoherence length L");
    require_p_inf(depol->p_inf);
  }
}

FiberParams FiberParams::standard_telecom() { return FiberParams(0.2, 100.0, 0.1, DephasingDominated{}); }

double FiberParams::decoherence_length_km() const {
  if (const auto* depol = std::get_if<DepolarizingDominated>(&regime_)) return depol->decoherence_length_km;
  return dephasing_length_km(delta_nu_, d_pmd_);
}

double FiberParams::p_inf() const {
  if (const auto* depol = std::get_if<DepolarizingDominated>(&regime_)) return depol->p_inf;
  return 0.5;
}

double transmissivity(const FiberParams& params, double d_km) {
  require_distance(d_km);
  return std::pow(10.0, -params.alpha() * d_km / 10.0);
}

double coherence_time_ps(double delta_nu_ghz) {
  require_positive(delta_nu_ghz, "delta_nu");
  // 1 / (2 pi * delta_nu * 1e9 Hz) seconds, expressed in ps.
  return 1e3 / (2.0 * std::numbers::pi * delta_nu_ghz);
}

double dephasing_length_km(double delta_nu_ghz, double d_pmd_ps_per_sqrt_km) {
  require_positive(d_pmd_ps_per_sqrt_km, "d_pmd");
  const double tau = coherence_time_ps(delta_nu_ghz);
  return 2.0 * tau * tau / (d_pmd_ps_per_sqrt_km * d_pmd_ps_per_sqrt_km);
}

double pauli_probability(const FiberParams& params, double d_km) {
  require_distance(d_km);
  return -params.p_inf() * std::expm1(-d_km / params.decoherence_length_km());
}

double max_distance_depolarizing(double decoherence_length_km, double p_inf) {
  require_positive(decoherence_length_km, "decoherence length L");
  require_p_inf(p_inf);
  constexpr double kThreshold = 2.0 / 3.0;
  if (p_inf <= kThreshold) return std::numeric_limits<double>::infinity();
  return decoherence_length_km * std::log(p_inf / (p_inf - kThreshold));
}

PauliDistribution regime_distribution(const FiberParams& params, double p) {
  return params.dephasing_dominated() ? PauliDistribution::dephasing(p) : PauliDistribution::isotropic(p);
}

ErasurePauliChannel channel_at_distance(const FiberParams& params, double d_km) {
  return {transmissivity(params, d_km), regime_distribution(params, pauli_probability(params, d_km))};
}

}  // namespace eplink
