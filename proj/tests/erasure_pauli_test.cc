#include "eplink/erasure_pauli.h"

#include <random>

#include "gtest/gtest.h"

#include "eplink/errors.h"
#include "oracles.h"

using namespace eplink;

namespace {

const std::vector<Complex> kPlus = {M_SQRT1_2, M_SQRT1_2};
const std::vector<Complex> kMinus = {M_SQRT1_2, -M_SQRT1_2};

// mpmath, 30 digits.
constexpr double kLower085 = 0.0762076600877130745728;   // 0.5 (1 - H(.85,.05,.05,.05))
constexpr double kUpper085 = 0.195079847641799788182;    // 0.5 (1 - H2(.85))
constexpr double kOneMinusH2of015 = 0.390159695283599576364;
constexpr double kEdhAnchor = 0.00564967097760017947324;  // 0.01 (1 - H2(0.08957))

PauliDistribution random_dist(std::mt19937_64& rng) { return PauliDistribution(oracle::random_distribution(rng)); }

}  // namespace

TEST(erasure_pauli_channel, rejects_bad_eta) {
  EXPECT_THROW(ErasurePauliChannel(1.5, PauliDistribution::identity()), InvalidInput);
  EXPECT_THROW(ErasurePauliChannel(-0.1, PauliDistribution::identity()), InvalidInput);
}

TEST(apply_ep, examples) {
  const DensityMatrix plus = DensityMatrix::from_ket(kPlus);

  const DensityMatrix lossless = apply_ep(ErasurePauliChannel(1.0, PauliDistribution::identity()), plus);
  EXPECT_EQ(lossless.matrix(), embed_polarization(plus.matrix()));
  EXPECT_EQ(lossless(kFlagIndex, kFlagIndex), Complex(0.0));

  Matrix flag(3);
  flag(2, 2) = 1.0;
  EXPECT_EQ(apply_ep(ErasurePauliChannel::complete_erasure(), plus).matrix(), flag);

  const DensityMatrix half = apply_ep(ErasurePauliChannel(0.5, PauliDistribution({0, 0, 0, 1})), plus);
  Matrix expected = 0.5 * embed_polarization(DensityMatrix::from_ket(kMinus).matrix());
  expected(2, 2) = 0.5;
  EXPECT_LT(max_abs_diff(half.matrix(), expected), 1e-15);

  EXPECT_THROW(apply_ep(ErasurePauliChannel(0.5, PauliDistribution::identity()), DensityMatrix::maximally_mixed(3)),
               InvalidInput);
}

TEST(apply_ep, flag_block_and_kraus_oracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 1000; ++i) {
    const double eta = u(rng);
    const auto p = oracle::random_distribution(rng);
    const Matrix rho = oracle::random_qubit_state(rng);
    const DensityMatrix out = apply_ep(ErasurePauliChannel(eta, PauliDistribution(p)), DensityMatrix(rho));
    ASSERT_EQ(out(2, 2), Complex(1.0 - eta));
    for (std::size_t k = 0; k < 2; ++k) {
      ASSERT_EQ(out(k, 2), Complex(0.0));
      ASSERT_EQ(out(2, k), Complex(0.0));
    }
    const oracle::MatX ref = oracle::apply_kraus(oracle::kraus(eta, p, 0.0), oracle::to_eigen(rho));
    ASSERT_LT(oracle::max_abs_diff(oracle::to_eigen(out.matrix()), ref), 1e-14);
  }
}

TEST(choi_ep, limits_and_kraus_oracle) {
  const DensityMatrix sigma = choi_ep(ErasurePauliChannel(1.0, PauliDistribution({0.7, 0.1, 0.1, 0.1})));
  EXPECT_EQ(sigma.matrix(), embed_two_qubit(choi_state(PauliDistribution({0.7, 0.1, 0.1, 0.1})).matrix()));

  const DensityMatrix tau = choi_ep(ErasurePauliChannel::complete_erasure());
  Matrix expected(6);
  expected(2, 2) = expected(5, 5) = 0.5;
  EXPECT_EQ(tau.matrix(), expected);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 300; ++i) {
    const double eta = u(rng);
    const auto p = oracle::random_distribution(rng);
    const oracle::MatX ref = oracle::choi_from_kraus(oracle::kraus(eta, p, 0.0));
    const Matrix got = choi_ep(ErasurePauliChannel(eta, PauliDistribution(p))).matrix();
    ASSERT_LT(oracle::max_abs_diff(oracle::to_eigen(got), ref), 1e-14);
    ASSERT_NEAR(got.trace().real(), 1.0, 1e-14);
  }
}

TEST(capacity_bounds, examples) {
  const auto noiseless = capacity_bounds(ErasurePauliChannel(0.3, PauliDistribution::identity()));
  EXPECT_DOUBLE_EQ(noiseless.lower, 0.3);
  EXPECT_DOUBLE_EQ(noiseless.upper, 0.3);
  EXPECT_TRUE(noiseless.exact);

  const auto mixed = capacity_bounds(ErasurePauliChannel(1.0, PauliDistribution::uniform()));
  EXPECT_EQ(mixed.lower, 0.0);
  EXPECT_EQ(mixed.upper, 0.0);
  EXPECT_TRUE(mixed.exact);

  const auto b = capacity_bounds(ErasurePauliChannel(0.5, PauliDistribution({0.85, 0.05, 0.05, 0.05})));
  EXPECT_NEAR(b.lower, kLower085, 1e-14);
  EXPECT_NEAR(b.upper, kUpper085, 1e-14);
  EXPECT_FALSE(b.exact);
}

TEST(capacity_bounds, ordering_holds_everywhere_including_boundary) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 5000; ++i) {
    const auto b = capacity_bounds(ErasurePauliChannel(u(rng), random_dist(rng)));
    ASSERT_LE(0.0, b.lower);
    ASSERT_LE(b.lower, b.upper);
    ASSERT_LE(b.upper, 1.0);
    ASSERT_EQ(b.exact, std::abs(b.upper - b.lower) < kExactTolerance);
  }
  const auto edge = capacity_bounds(ErasurePauliChannel(0.8, PauliDistribution({0.5, 0.5, 0, 0})));
  EXPECT_EQ(edge.upper, 0.0);
  EXPECT_LE(edge.lower, edge.upper);
}

TEST(capacity_edp_upper, examples_and_specialization) {
  EXPECT_DOUBLE_EQ(capacity_edp_upper(0.7, 0.0), 0.7);
  EXPECT_NEAR(capacity_edp_upper(0.7, 2.0 / 3.0), 0.0, 1e-15);
  EXPECT_EQ(capacity_edp_upper(0.7, 0.9), 0.0);
  EXPECT_NEAR(capacity_edp_upper(1.0, 0.2), kOneMinusH2of015, 1e-15);
  EXPECT_THROW(capacity_edp_upper(1.1, 0.2), InvalidInput);
  EXPECT_THROW(capacity_edp_upper(0.5, -0.2), InvalidInput);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 2000; ++i) {
    const double eta = u(rng);
    const double p = u(rng);
    ASSERT_NEAR(capacity_edp_upper(eta, p),
                capacity_bounds(ErasurePauliChannel(eta, PauliDistribution::isotropic(p))).upper, 1e-12);
  }
}

TEST(capacity_edh, examples_and_specialization) {
  EXPECT_DOUBLE_EQ(capacity_edh(0.4, 0.0), 0.4);
  EXPECT_EQ(capacity_edh(0.4, 0.5), 0.0);
  EXPECT_NEAR(capacity_edh(0.01, 0.08957), kEdhAnchor, 1e-15);
  EXPECT_NEAR(capacity_edh(0.6, 0.9), capacity_edh(0.6, 0.1), 1e-15);  // relabeled
  EXPECT_THROW(capacity_edh(0.4, 1.5), InvalidInput);

  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 2000; ++i) {
    const double eta = u(rng);
    const double p = 0.5 * u(rng);
    const auto b = capacity_bounds(ErasurePauliChannel(eta, PauliDistribution::dephasing(p)));
    ASSERT_NEAR(b.lower, capacity_edh(eta, p), 1e-12);
    ASSERT_NEAR(b.upper, capacity_edh(eta, p), 1e-12);
    ASSERT_TRUE(b.exact);
  }
}

TEST(capacity_edh, monotone_in_p_and_linear_in_eta) {
  double prev = capacity_edh(0.8, 0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = capacity_edh(0.8, 0.5 * i / 1000.0);
    ASSERT_LE(cur, prev + 1e-15);
    prev = cur;
  }
  for (double p : {0.01, 0.1, 0.3}) {
    EXPECT_NEAR(capacity_edh(0.25, p) * 4.0, capacity_edh(1.0, p), 1e-15);
    EXPECT_NEAR(capacity_edh(0.25, p) + capacity_edh(0.5, p), capacity_edh(0.75, p), 1e-15);
  }
}

TEST(is_zero_capacity, examples) {
  EXPECT_TRUE(is_zero_capacity(ErasurePauliChannel(0.0, PauliDistribution::identity())));
  EXPECT_TRUE(is_zero_capacity(ErasurePauliChannel(0.5, PauliDistribution({0.5, 0, 0, 0.5}))));
  const ErasurePauliChannel weak(1e-6, PauliDistribution({0.51, 0.49, 0, 0}));
  EXPECT_FALSE(is_zero_capacity(weak));
  EXPECT_TRUE(npt_witness(weak.dist()).is_npt);
}

TEST(is_zero_capacity, matches_vanishing_upper_bound_and_npt) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u;
  int used = 0;
  for (int i = 0; i < 10000; ++i) {
    // Every fifth channel sits at eta = 0.
    const double eta = i % 5 == 0 ? 0.0 : u(rng);
    const ErasurePauliChannel ch(eta, random_dist(rng));
    // Phi vanishes quadratically at p_max = 1/2; skip the band where the
    // upper bound is positive but below the numerical zero.
    if (std::abs(ch.dist().max() - 0.5) < 1e-5) continue;
    ++used;
    ASSERT_EQ(is_zero_capacity(ch), capacity_bounds(ch).upper < 1e-12);
    ASSERT_EQ(!is_zero_capacity(ch), ch.eta() > 0.0 && npt_witness(ch.dist()).is_npt);
  }
  EXPECT_GT(used, 9900);
}

TEST(ensemble_decomposition, weights_and_recomposition) {
  const auto full = ensemble_decomposition(ErasurePauliChannel(1.0, PauliDistribution::identity()));
  EXPECT_EQ(full[0].weight, 1.0);
  EXPECT_EQ(full[0].kind, ComponentKind::Pauli);
  EXPECT_EQ(full[1].weight, 0.0);

  const auto none = ensemble_decomposition(ErasurePauliChannel::complete_erasure());
  EXPECT_EQ(none[1].weight, 1.0);
  EXPECT_EQ(none[1].kind, ComponentKind::CompleteErasure);

  std::mt19937_64 rng(43);
  const ErasurePauliChannel ch(0.7, random_dist(rng));
  const auto parts = ensemble_decomposition(ch);
  EXPECT_DOUBLE_EQ(parts[0].weight, 0.7);
  EXPECT_DOUBLE_EQ(parts[1].weight, 0.3);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho(oracle::random_qubit_state(rng));
    Matrix mixed(3);
    for (const auto& part : parts) mixed += part.weight * apply_component(part, rho);
    ASSERT_LT(max_abs_diff(mixed, apply_ep(ch, rho).matrix()), 1e-12);
  }
}
