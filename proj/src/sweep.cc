#include "eplink/sweep.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "eplink/errors.h"
#include "eplink/format.h"
#include "eplink/mc_oracle.h"

namespace eplink {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest effective Pauli probability at distance d, using eta > 0 for every
// finite d even where 10^(-alpha d/10) underflows.
bool zero_capacity_at(const FiberParams& fiber, const DarkCountParams& dc, double d_km) {
  const PauliDistribution dist = regime_distribution(fiber, pauli_probability(fiber, d_km));
  double r = 1.0;
  if (dc.p_dc() > 0.0) {
    const double inv_eta = std::pow(10.0, fiber.alpha() * d_km / 10.0);
    r = 1.0 / (1.0 + (inv_eta - 1.0) * dc.p_dc());
  }
  double p_max = 0.0;
  for (double p : dist.probs()) p_max = std::max(p_max, r * p + (1.0 - r) / 4.0);
  return p_max <= 0.5;
}

// Smallest p in [0, hi] at which the erasure-Pauli channel of the regime's
// family becomes zero-capacity after dark counts, or NaN when [0, hi] does
// not bracket a crossing.
double analytic_parameter_threshold(const FiberParams& fiber, double eta, const DarkCountParams& dc, double hi) {
  auto zero = [&](double p) {
    return is_zero_capacity(effective_channel(ErasurePauliChannel(eta, regime_distribution(fiber, p)), dc));
  };
  double lo = 0.0;
  if (zero(lo) || !zero(hi)) return std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (zero(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string regime_name(RegimeKind k) { return k == RegimeKind::Dephasing ? "dephase" : "depol"; }

}  // namespace

void SweepConfig::validate() const {
  auto fail = [](const std::string& msg) { throw InvalidInput(msg); };
  if (!(d_min >= 0.0)) fail("d_min must be >= 0");
  if (!(d_max > d_min)) fail("d_max must exceed d_min");
  if (points < 2) fail("points must be at least 2");
  if (scale == GridScale::Log && !(d_min > 0.0)) fail("log-scale grids need d_min > 0");
  if (p_dc.empty()) fail("at least one p_dc value is required");
  for (double p : p_dc) {
    if (!(p >= 0.0 && p <= 1.0)) fail("p_dc value " + format_double(p) + " outside [0, 1]");
  }
  if (clock_hz && !(*clock_hz > 0.0)) fail("clock_hz must be positive");
  if (!(distance >= 0.0)) fail("distance must be >= 0");
  if (trials < kMinTrials) fail("trials must be at least " + std::to_string(kMinTrials));
  (void)fiber();
}

FiberParams SweepConfig::fiber() const {
  if (regime == RegimeKind::Dephasing) return FiberParams(alpha, delta_nu, d_pmd, DephasingDominated{});
  return FiberParams(alpha, delta_nu, d_pmd, DepolarizingDominated{length_km, p_inf});
}

std::vector<double> distance_grid(const SweepConfig& config) {
  std::vector<double> grid(config.points);
  const double steps = static_cast<double>(config.points - 1);
  for (std::size_t i = 0; i < config.points; ++i) {
    const double t = static_cast<double>(i) / steps;
    grid[i] = config.scale == GridScale::Log ? config.d_min * std::pow(config.d_max / config.d_min, t)
                                             : config.d_min + t * (config.d_max - config.d_min);
  }
  grid.back() = config.d_max;
  return grid;
}

SweepRow evaluate_point(const FiberParams& fiber, double p_dc, double d_km, std::optional<double> clock_hz) {
  const ErasurePauliChannel ch = channel_at_distance(fiber, d_km);
  const ErasurePauliChannel eff = effective_channel(ch, DarkCountParams(p_dc));
  const CapacityBounds b = capacity_bounds(eff);
  SweepRow row{p_dc, d_km, ch.eta(), pauli_probability(fiber, d_km), eff.eta(), b.lower, b.upper, b.exact, std::nullopt};
  if (clock_hz) row.rate_per_s = *clock_hz * b.lower;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const FiberParams fiber = config.fiber();
  const std::vector<double> grid = distance_grid(config);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * config.p_dc.size());
  for (double p_dc : config.p_dc) {
    for (double d : grid) rows.push_back(evaluate_point(fiber, p_dc, d, config.clock_hz));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.p_dc != b.p_dc ? a.p_dc < b.p_dc : a.d_km < b.d_km;
  });
  return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.d_km) << ',' << format_double(r.eta) << ',' << format_double(r.p) << ','
       << format_double(r.eta_prime) << ',' << format_double(r.lower) << ',' << format_double(r.upper) << ',';
    if (r.rate_per_s) os << format_double(*r.rate_per_s);
    os << '\n';
  }
}

void write_json(std::ostream& os, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["fiber"] = {{"alpha_db_per_km", config.alpha},
                {"delta_nu_ghz", config.delta_nu},
                {"d_pmd_ps_per_sqrt_km", config.d_pmd},
                {"regime", regime_name(config.regime)},
                {"decoherence_length_km", config.fiber().decoherence_length_km()},
                {"p_inf", config.fiber().p_inf()}};
  j["p_dc"] = config.p_dc;
  j["clock_hz"] = config.clock_hz ? ordered_json(*config.clock_hz) : ordered_json(nullptr);
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"p_dc", r.p_dc},
                   {"d_km", r.d_km},
                   {"eta", r.eta},
                   {"p", r.p},
                   {"eta_prime", r.eta_prime},
                   {"lower_ebits", r.lower},
                   {"upper_ebits", r.upper},
                   {"exact", r.exact},
                   {"rate_per_s", r.rate_per_s ? ordered_json(*r.rate_per_s) : ordered_json(nullptr)}});
  }
  j["rows"] = std::move(out);
  os << j.dump(2) << '\n';
}

void emit_sweep(const SweepConfig& config, const std::vector<SweepRow>& rows, std::ostream& stdout_stream) {
  auto write = [&](std::ostream& os) {
    if (config.format == OutputFormat::Json) {
      write_json(os, config, rows);
    } else {
      write_csv(os, rows);
    }
  };
  if (config.out.empty()) {
    write(stdout_stream);
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + config.out + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + config.out + "'");
}

double zero_capacity_distance_bisection(const FiberParams& fiber, const DarkCountParams& dc, double max_km) {
  if (zero_capacity_at(fiber, dc, 0.0)) return 0.0;
  double lo = 0.0;
  double hi = 1e-3;
  while (!zero_capacity_at(fiber, dc, hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > max_km) return kInf;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (zero_capacity_at(fiber, dc, mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double solve_threshold(const FiberParams& fiber, const DarkCountParams& dc) {
  if (dc.p_dc() == 0.0) {
    // Without dark counts only p(d) matters: eta(d) > 0 for every finite d.
    if (fiber.dephasing_dominated()) return kInf;  // p(d) < 1/2 for all finite d
    return max_distance_depolarizing(fiber.decoherence_length_km(), fiber.p_inf());
  }
  return zero_capacity_distance_bisection(fiber, dc);
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " observed=" << format_double(c.observed)
       << " expected=" << format_double(c.expected) << " tolerance=" << format_double(c.tolerance) << '\n';
  }
  os << (passed() ? "verification passed" : "verification FAILED") << " (" << checks.size() << " checks)\n";
  return os.str();
}

std::string VerifyReport::json() const {
  using nlohmann::ordered_json;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"observed", c.observed},
                   {"expected", c.expected},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  }
  ordered_json j;
  j["passed"] = passed();
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

VerifyReport verify(const SweepConfig& config, const VerifyOptions& options) {
  config.validate();
  const FiberParams fiber = config.fiber();
  const std::size_t n = config.trials;
  const double nd = static_cast<double>(n);

  std::vector<double> points = {config.d_min, config.distance, config.d_max};
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  VerifyReport report;
  auto add = [&](std::string name, double observed, double expected, double tol) {
    report.checks.push_back({std::move(name), observed, expected, tol, std::abs(observed - expected) <= tol});
  };

  std::uint64_t run = 0;
  for (double d : points) {
    const ErasurePauliChannel ch = channel_at_distance(fiber, d);
    const double eta_sampled = std::clamp(ch.eta() + options.eta_perturbation, 0.0, 1.0);
    const ErasurePauliChannel sampled(eta_sampled, ch.dist());

    for (double p_dc : config.p_dc) {
      const DarkCountParams dc(p_dc);
      const std::string tag = "d=" + format_double(d, 6) + " p_dc=" + format_double(p_dc, 6) + " ";
      const McReport mc = estimate_choi_against(sampled, ch, dc, n, derive_seed(config.seed, run++));
      const ErasurePauliChannel eff = effective_channel(ch, dc);
      const double eta_p = eff.eta();

      add(tag + "click_rate", mc.click_rate, eta_p, 4.0 * std::sqrt(eta_p * (1.0 - eta_p) / nd) + 0.5 / nd);
      add(tag + "choi_max_deviation", mc.max_choi_deviation, 0.0, 5.0 / std::sqrt(nd));

      if (nd * eta_p >= 1000.0) {
        const double r = ch.eta() / eta_p;
        const double clicks = static_cast<double>(mc.counts.clicks());
        for (std::size_t k = 0; k < 4; ++k) {
          const double expected = eff.dist()[k];
          const double var = std::max(0.0, r * ch.dist()[k] + (1.0 - r) / 16.0 - expected * expected);
          add(tag + "click_pauli_" + "IXYZ"[k], mc.click_conditioned_dist[k], expected,
              4.0 * std::sqrt(var / std::max(clicks, 1.0)) + 1e-12);
        }
      }

      if (d == points.front()) {
        const double hi = fiber.dephasing_dominated() ? 0.5 : 1.0;
        const double analytic = analytic_parameter_threshold(fiber, ch.eta(), dc, hi);
        if (!std::isnan(analytic)) {
          ThresholdOptions opts;
          opts.n_per_point = std::max(kMinTrials, n / 10);
          opts.seed = derive_seed(config.seed, run++);
          const ChannelFamily family = [&](double p) {
            return ErasurePauliChannel(eta_sampled, regime_distribution(fiber, p));
          };
          double estimate = std::numeric_limits<double>::quiet_NaN();
          try {
            estimate = empirical_threshold(family, dc, 0.0, hi, opts).value;
          } catch (const NonBracketingRange&) {
          }
          add(tag + "npt_threshold", estimate, analytic, opts.width);
        }
      }
    }
  }
  return report;
}

}  // namespace eplink
