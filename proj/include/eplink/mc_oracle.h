#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "eplink/dark_counts.h"
#include "eplink/erasure_pauli.h"

namespace eplink {

/// Seedable 64-bit stream: std::mt19937_64 seeded through
/// std::seed_seq{seed_lo, seed_hi, stream_lo, stream_hi}. Distinct stream
/// ids give independent sequences, so a run split into batches reproduces
/// exactly regardless of how the batches are scheduled.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct TrialOutcome {
  bool clicked = false;
  std::optional<Pauli> pauli;  // set iff clicked by a transmitted photon
  bool dark_count = false;
};

/// One use of the channel: the photon survives with probability eta and gets
/// a Pauli error ~ dist; otherwise a dark count clicks with probability p_dc;
/// otherwise nothing is detected.
TrialOutcome sample_trial(const ErasurePauliChannel& ch, const DarkCountParams& dc, Rng& rng);

struct OutcomeCounts {
  std::uint64_t erasures = 0;
  std::uint64_t dark = 0;
  std::array<std::uint64_t, 4> pauli{};

  std::uint64_t photons() const { return pauli[0] + pauli[1] + pauli[2] + pauli[3]; }
  std::uint64_t clicks() const { return photons() + dark; }
  std::uint64_t total() const { return clicks() + erasures; }
  OutcomeCounts& operator+=(const OutcomeCounts& other);
};

inline constexpr std::size_t kTrialsPerBatch = std::size_t{1} << 16;
inline constexpr std::size_t kMinTrials = 10'000;

/// Runs n trials in fixed-size batches (batch b uses Rng(seed, b)), spread
/// over the available hardware threads. The sum is independent of thread
/// count and completion order.
OutcomeCounts sample_counts(const ErasurePauliChannel& ch, const DarkCountParams& dc, std::size_t n,
                            std::uint64_t seed);

struct McReport {
  std::size_t n_trials = 0;
  OutcomeCounts counts;
  double click_rate = 0.0;
  double click_rate_stderr = 0.0;
  /// Pauli frequencies among photon (non-dark) clicks; all zero if none.
  std::array<double, 4> empirical_pauli_dist{};
  /// Polarization statistics over all clicks, dark counts contributing 1/4
  /// to each Pauli; all zero if no clicks.
  std::array<double, 4> click_conditioned_dist{};
  Matrix estimated_choi;
  Matrix analytic_choi;
  double max_choi_deviation = 0.0;
};

/// Empirical 6x6 Choi state from n sampled uses with half of |Phi+> as input.
/// Compared against choi_ep(effective_channel(ch, dc)).
/// Throws InsufficientSamples when n < kMinTrials.
McReport estimate_choi(const ErasurePauliChannel& ch, const DarkCountParams& dc, std::size_t n, std::uint64_t seed);

/// Same as estimate_choi, but sampling from `sampled` and comparing against
/// the analytic Choi of `reference`. Used to check that a corrupted channel
/// is detected.
McReport estimate_choi_against(const ErasurePauliChannel& sampled, const ErasurePauliChannel& reference,
                               const DarkCountParams& dc, std::size_t n, std::uint64_t seed);

std::string to_json(const McReport& report);

/// Minimum partial-transpose eigenvalue of the click-postselected Choi state
/// estimated from counts, with a standard error from the per-click variance
/// along the minimizing eigenvector.
struct NptEstimate {
  double min_eigenvalue;
  double standard_error;
  std::uint64_t clicks;
};
NptEstimate postselected_npt(const OutcomeCounts& counts);

/// Independent 64-bit seed for sub-run `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

using ChannelFamily = std::function<ErasurePauliChannel(double)>;

struct ThresholdOptions {
  std::size_t n_per_point = 100'000;
  std::uint64_t seed = 1;
  double width = 0.02;
  // At a tangent point (dephasing at p = 1/2) two eigenvalues sit at zero and
  // their minimum is biased low; z = 3 keeps false NPT calls near 0.3%.
  double z = 3.0;
};

struct ThresholdEstimate {
  double value;  // midpoint of the final bracket
  double lo;
  double hi;
  int evaluations;
};

/// Locates the parameter at which the postselected Choi state stops being NPT.
/// An endpoint counts as NPT when min_eigenvalue + z*stderr < 0, an interior
/// point when min_eigenvalue < 0. Bisects until the bracket is narrower than
/// options.width.
/// Throws NonBracketingRange if both endpoints classify the same way.
ThresholdEstimate empirical_threshold(const ChannelFamily& family, const DarkCountParams& dc, double lo, double hi,
                                      const ThresholdOptions& options = {});

}  // namespace eplink
