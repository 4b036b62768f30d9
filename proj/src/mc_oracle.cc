#include "eplink/mc_oracle.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "json.hpp"

#include "eplink/errors.h"
#include "eplink/format.h"

namespace eplink {

namespace {

constexpr std::size_t kChoiDim = 2 * kOutputDim;

std::seed_seq make_seed_seq(std::uint64_t a, std::uint64_t b) {
  return std::seed_seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                       static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
}

// (I (x) P_k)|Phi+> on qubit (x) `out_dim`-level system, index a*out_dim + b.
std::vector<Complex> bell_image(Pauli k, std::size_t out_dim) {
  const Matrix& p = pauli_matrix(k);
  const double amp = 1.0 / std::sqrt(2.0);
  std::vector<Complex> psi(2 * out_dim);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) psi[a * out_dim + b] = p(b, a) * amp;
  }
  return psi;
}

Matrix estimated_choi_from_counts(const OutcomeCounts& counts) {
  const double n = static_cast<double>(counts.total());
  Matrix est(kChoiDim);
  for (Pauli k : kPaulis) {
    const auto c = counts.pauli[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    est += (static_cast<double>(c) / n) * Matrix::outer(bell_image(k, kOutputDim));
  }
  // Dark count: reference qubit I/2, receiver I/2 on the polarization levels.
  const double w_dark = static_cast<double>(counts.dark) / n;
  // No click: reference qubit I/2, receiver |e><e|.
  const double w_erase = static_cast<double>(counts.erasures) / n;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) est(a * kOutputDim + b, a * kOutputDim + b) += 0.25 * w_dark;
    est(a * kOutputDim + kFlagIndex, a * kOutputDim + kFlagIndex) += 0.5 * w_erase;
  }
  return est;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto seq = make_seed_seq(seed, index);
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

TrialOutcome sample_trial(const ErasurePauliChannel& ch, const DarkCountParams& dc, Rng& rng) {
  TrialOutcome out;
  if (rng.uniform() < ch.eta()) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t k = 0;
    for (; k < 3; ++k) {
      cumulative += ch.dist()[k];
      if (u < cumulative) break;
    }
    // Skip trailing zero-probability outcomes that rounding could select.
    while (k > 0 && ch.dist()[k] == 0.0) --k;
    out.clicked = true;
    out.pauli = kPaulis[k];
  } else if (rng.uniform() < dc.p_dc()) {
    out.clicked = true;
    out.dark_count = true;
  }
  return out;
}

OutcomeCounts& OutcomeCounts::operator+=(const OutcomeCounts& other) {
  erasures += other.erasures;
  dark += other.dark;
  for (std::size_t k = 0; k < 4; ++k) pauli[k] += other.pauli[k];
  return *this;
}

OutcomeCounts sample_counts(const ErasurePauliChannel& ch, const DarkCountParams& dc, std::size_t n,
                            std::uint64_t seed) {
  const std::size_t batches = (n + kTrialsPerBatch - 1) / kTrialsPerBatch;
  std::vector<OutcomeCounts> per_batch(batches);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t b = next++; b < batches; b = next++) {
      Rng rng(seed, b);
      const std::size_t m = std::min(kTrialsPerBatch, n - b * kTrialsPerBatch);
      OutcomeCounts& c = per_batch[b];
      for (std::size_t t = 0; t < m; ++t) {
        const TrialOutcome o = sample_trial(ch, dc, rng);
        if (o.pauli) {
          ++c.pauli[static_cast<std::size_t>(*o.pauli)];
        } else if (o.dark_count) {
          ++c.dark;
        } else {
          ++c.erasures;
        }
      }
    }
  };

  const std::size_t threads = std::min<std::size_t>(batches, std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  OutcomeCounts total;
  for (const auto& c : per_batch) total += c;
  return total;
}

McReport estimate_choi(const ErasurePauliChannel& ch, const DarkCountParams& dc, std::size_t n, std::uint64_t seed) {
  return estimate_choi_against(ch, ch, dc, n, seed);
}

McReport estimate_choi_against(const ErasurePauliChannel& sampled, const ErasurePauliChannel& reference,
                               const DarkCountParams& dc, std::size_t n, std::uint64_t seed) {
  if (n < kMinTrials) {
    throw InsufficientSamples("need at least " + std::to_string(kMinTrials) + " trials, got " + std::to_string(n));
  }
  McReport r;
  r.n_trials = n;
  r.counts = sample_counts(sampled, dc, n, seed);

  const double nd = static_cast<double>(n);
  r.click_rate = static_cast<double>(r.counts.clicks()) / nd;
  r.click_rate_stderr = std::sqrt(r.click_rate * (1.0 - r.click_rate) / nd);

  if (const auto photons = r.counts.photons(); photons > 0) {
    for (std::size_t k = 0; k < 4; ++k) r.empirical_pauli_dist[k] = static_cast<double>(r.counts.pauli[k]) / photons;
  }
  if (const auto clicks = r.counts.clicks(); clicks > 0) {
    const double dark_share = 0.25 * static_cast<double>(r.counts.dark);
    for (std::size_t k = 0; k < 4; ++k) {
      r.click_conditioned_dist[k] = (static_cast<double>(r.counts.pauli[k]) + dark_share) / static_cast<double>(clicks);
    }
  }

  r.estimated_choi = estimated_choi_from_counts(r.counts);
  r.analytic_choi = choi_ep(effective_channel(reference, dc)).matrix();
  r.max_choi_deviation = max_abs_diff(r.estimated_choi, r.analytic_choi);
  return r;
}

std::string to_json(const McReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n_trials"] = report.n_trials;
  j["counts"] = {{"erasures", report.counts.erasures},
                 {"dark", report.counts.dark},
                 {"pauli", report.counts.pauli}};
  j["click_rate"] = report.click_rate;
  j["click_rate_stderr"] = report.click_rate_stderr;
  j["empirical_pauli_dist"] = report.empirical_pauli_dist;
  j["click_conditioned_dist"] = report.click_conditioned_dist;
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (const auto& z : report.estimated_choi.data()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["estimated_choi"] = {{"dim", report.estimated_choi.dim()}, {"re", re}, {"im", im}};
  j["max_choi_deviation"] = report.max_choi_deviation;
  return j.dump(2);
}

NptEstimate postselected_npt(const OutcomeCounts& counts) {
  const auto clicks = counts.clicks();
  if (clicks == 0) return {0.0, std::numeric_limits<double>::infinity(), 0};

  const double nc = static_cast<double>(clicks);
  std::array<Matrix, 4> bell_pt;
  Matrix sigma_pt(4);
  for (Pauli k : kPaulis) {
    const std::size_t i = static_cast<std::size_t>(k);
    bell_pt[i] = partial_transpose_second(Matrix::outer(bell_image(k, 2)), 2, 2);
    sigma_pt += (static_cast<double>(counts.pauli[i]) / nc) * bell_pt[i];
  }
  // The partial transpose of I/4 is I/4.
  sigma_pt += (0.25 * static_cast<double>(counts.dark) / nc) * Matrix::identity(4);

  const EigenSystem es = hermitian_eigensystem(sigma_pt);
  const std::vector<Complex> v = es.vectors.column(0);

  double second_moment = 0.0625 * static_cast<double>(counts.dark) / nc;
  for (std::size_t i = 0; i < 4; ++i) {
    const double x = expectation(bell_pt[i], v).real();
    second_moment += static_cast<double>(counts.pauli[i]) / nc * x * x;
  }
  const double lambda = es.values[0];
  const double var = std::max(0.0, second_moment - lambda * lambda);
  return {lambda, std::sqrt(var / nc), clicks};
}

ThresholdEstimate empirical_threshold(const ChannelFamily& family, const DarkCountParams& dc, double lo, double hi,
                                      const ThresholdOptions& options) {
  if (options.n_per_point < kMinTrials) {
    throw InsufficientSamples("need at least " + std::to_string(kMinTrials) + " trials per point");
  }
  if (!(lo < hi)) throw InvalidInput("threshold scan needs lo < hi");
  if (!(options.width > 0.0)) throw InvalidInput("threshold width must be positive");

  int evaluations = 0;
  // Endpoints must be significantly NPT (or not); inside the bracket the sign
  // of the point estimate decides, which keeps the crossing unbiased.
  auto npt = [&](double x, double z) {
    const auto counts = sample_counts(family(x), dc, options.n_per_point,
                                      derive_seed(options.seed, static_cast<std::uint64_t>(evaluations++)));
    const NptEstimate est = postselected_npt(counts);
    return est.clicks > 0 && est.min_eigenvalue + z * est.standard_error < 0.0;
  };

  const bool npt_lo = npt(lo, options.z);
  const bool npt_hi = npt(hi, options.z);
  if (npt_lo == npt_hi) {
    throw NonBracketingRange("scan [" + format_double(lo) + ", " + format_double(hi) + "] is " +
                             (npt_lo ? "NPT" : "not significantly NPT") + " at both ends");
  }
  while (hi - lo >= options.width) {
    const double mid = 0.5 * (lo + hi);
    (npt(mid, 0.0) == npt_lo ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), lo, hi, evaluations};
}

}  // namespace eplink
