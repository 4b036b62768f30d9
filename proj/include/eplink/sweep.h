#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eplink/dark_counts.h"
#include "eplink/fiber.h"

namespace eplink {

enum class RegimeKind { Depolarizing, Dephasing };
enum class GridScale { Linear, Log };
enum class OutputFormat { Csv, Json };

/// Everything the command-line front end needs. Defaults reproduce the
/// standard telecom fiber with dark-count probabilities 0, 1e-3 and 1e-2.
struct SweepConfig {
  double alpha = 0.2;
  double delta_nu = 100.0;
  double d_pmd = 0.1;
  RegimeKind regime = RegimeKind::Dephasing;
  double p_inf = 1.0;         // depolarizing regime only
  double length_km = 0.05;    // depolarizing regime only
  std::vector<double> p_dc = {0.0, 1e-3, 1e-2};
  double d_min = 1.0;
  double d_max = 500.0;
  std::size_t points = 100;
  GridScale scale = GridScale::Linear;
  std::optional<double> clock_hz;
  std::uint64_t seed = 20240601;
  std::size_t trials = 1'000'000;
  double distance = 100.0;  // single-point commands
  std::string out;          // empty: stdout
  OutputFormat format = OutputFormat::Csv;

  /// Throws InvalidInput naming the offending field.
  void validate() const;
  FiberParams fiber() const;
};

struct SweepRow {
  double p_dc;
  double d_km;
  double eta;
  double p;
  double eta_prime;
  double lower;
  double upper;
  bool exact;
  std::optional<double> rate_per_s;
};

std::vector<double> distance_grid(const SweepConfig& config);

/// Bounds of the dark-count effective channel at one distance.
SweepRow evaluate_point(const FiberParams& fiber, double p_dc, double d_km, std::optional<double> clock_hz);

/// One row per (p_dc, d), sorted by p_dc then d.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr const char* kCsvHeader = "d_km,eta,p,eta_prime,lower_ebits,upper_ebits,rate_per_s";

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_json(std::ostream& os, const SweepConfig& config, const std::vector<SweepRow>& rows);

/// Writes to config.out (stdout when empty) in config.format.
/// Throws IoError when the file cannot be written.
void emit_sweep(const SweepConfig& config, const std::vector<SweepRow>& rows, std::ostream& stdout_stream);

/// Smallest distance at which the upper capacity bound vanishes, or +inf.
/// Closed form in the depolarizing regime without dark counts, bisection on
/// is_zero_capacity of the effective channel otherwise.
double solve_threshold(const FiberParams& fiber, const DarkCountParams& dc);

/// Bisection on is_zero_capacity(effective_channel(channel_at_distance(d))).
/// Returns +inf when no crossing is found below max_km.
double zero_capacity_distance_bisection(const FiberParams& fiber, const DarkCountParams& dc, double max_km = 1e7);

struct VerifyOptions {
  /// Added to eta of the sampled channel only; nonzero values simulate a
  /// broken sampler and must make verification fail.
  double eta_perturbation = 0.0;
};

struct VerifyCheck {
  std::string name;
  double observed;
  double expected;
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
  std::string text() const;
  std::string json() const;
};

/// Monte-Carlo cross-checks at d_min, distance and d_max for every p_dc:
/// click rate (4 sigma), Choi deviation (5/sqrt(n)), click-conditioned Pauli
/// frequencies (4 sigma, when at least 1000 clicks are expected), and at d_min
/// the empirical NPT threshold of the regime's error family (within 0.02 of
/// the analytic one).
VerifyReport verify(const SweepConfig& config, const VerifyOptions& options = {});

}  // namespace eplink
