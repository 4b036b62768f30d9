#include "eplink/fiber.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"

#include "eplink/errors.h"

using namespace eplink;

namespace {

// mpmath, 30 digits.
constexpr double kTau100 = 1.59154943091895335769;
constexpr double kLdh = 506.605918211688857219;  // 100 GHz, 0.1 ps/sqrt(km)
constexpr double kP100 = 0.0895656412922300314964;

FiberParams depol(double length, double p_inf) {
  return FiberParams(0.2, 100.0, 0.1, DepolarizingDominated{length, p_inf});
}

double bisect(auto f, double lo, double hi) {
  for (int i = 0; i < 300 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(fiber_params, validation) {
  EXPECT_THROW(FiberParams(0.0, 100, 0.1, DephasingDominated{}), InvalidInput);
  EXPECT_THROW(FiberParams(0.2, -1, 0.1, DephasingDominated{}), InvalidInput);
  EXPECT_THROW(FiberParams(0.2, 100, 0.0, DephasingDominated{}), InvalidInput);
  EXPECT_THROW(depol(0.0, 1.0), InvalidInput);
  EXPECT_THROW(depol(0.05, 1.5), InvalidInput);
  EXPECT_THROW(depol(0.05, 0.0), InvalidInput);
  EXPECT_EQ(FiberParams::standard_telecom().p_inf(), 0.5);
}

TEST(transmissivity, examples) {
  const FiberParams f = FiberParams::standard_telecom();
  EXPECT_EQ(transmissivity(f, 0.0), 1.0);
  EXPECT_NEAR(transmissivity(f, 50.0), 0.1, 1e-16);
  EXPECT_NEAR(transmissivity(f, 100.0), 0.01, 1e-17);
  EXPECT_THROW(transmissivity(f, -1.0), InvalidInput);
}

TEST(coherence_time, examples) {
  EXPECT_NEAR(coherence_time_ps(100.0), kTau100, 1e-14);
  EXPECT_NEAR(coherence_time_ps(100.0), 1.6, 0.01);
  EXPECT_NEAR(coherence_time_ps(1000.0), 0.159154943091895, 1e-14);
  for (double k : {2.0, 7.5, 40.0}) EXPECT_NEAR(coherence_time_ps(100.0 * k), coherence_time_ps(100.0) / k, 1e-15);
  EXPECT_THROW(coherence_time_ps(0.0), InvalidInput);
}

TEST(dephasing_length, examples_and_units) {
  EXPECT_NEAR(dephasing_length_km(100.0, 0.1), kLdh, 1e-10);
  EXPECT_NEAR(dephasing_length_km(100.0, 10.0), 0.0507, 1e-4);
  EXPECT_NEAR(dephasing_length_km(100.0, 0.01), 5.066e4, 1.0);
  EXPECT_THROW(dephasing_length_km(100.0, -0.1), InvalidInput);
  for (double dnu : {10.0, 100.0, 2500.0}) {
    for (double d : {0.01, 0.3, 7.0}) {
      const double tau = coherence_time_ps(dnu);
      EXPECT_NEAR(dephasing_length_km(dnu, d) * d * d / (2.0 * tau * tau), 1.0, 1e-12);
    }
  }
}

TEST(pauli_probability, examples) {
  const FiberParams f = FiberParams::standard_telecom();
  EXPECT_EQ(pauli_probability(f, 0.0), 0.0);
  EXPECT_NEAR(pauli_probability(f, 100.0), kP100, 1e-15);
  EXPECT_NEAR(pauli_probability(depol(0.05, 1.0), 1e4), 1.0, 1e-15);
  EXPECT_THROW(pauli_probability(f, -3.0), InvalidInput);
}

TEST(pauli_probability, monotone_and_bounded) {
  for (const FiberParams& f : {FiberParams::standard_telecom(), depol(0.05, 0.8)}) {
    double prev_p = -1.0;
    double prev_eta = 2.0;
    for (int i = 0; i <= 2000; ++i) {
      const double d = 0.25 * i;
      const double p = pauli_probability(f, d);
      const double eta = transmissivity(f, d);
      ASSERT_LT(p, f.p_inf() + 1e-15);
      ASSERT_GE(p, prev_p);
      ASSERT_LE(eta, prev_eta);
      if (p < f.p_inf() * (1 - 1e-12)) ASSERT_GT(p, prev_p);
      prev_p = p;
      prev_eta = eta;
    }
  }
}

TEST(max_distance_depolarizing, examples) {
  EXPECT_NEAR(max_distance_depolarizing(0.05, 1.0), 0.0549306144334055, 1e-15);
  EXPECT_NEAR(max_distance_depolarizing(1.0, 1.0), std::log(3.0), 1e-15);
  EXPECT_TRUE(std::isinf(max_distance_depolarizing(1.0, 2.0 / 3.0)));
  EXPECT_TRUE(std::isinf(max_distance_depolarizing(1.0, 0.5)));
  EXPECT_THROW(max_distance_depolarizing(1.0, 1.2), InvalidInput);
  // General p_inf: p(d_max) == 2/3.
  for (double p_inf : {0.7, 0.85, 1.0}) {
    const FiberParams f = depol(0.3, p_inf);
    EXPECT_NEAR(pauli_probability(f, max_distance_depolarizing(0.3, p_inf)), 2.0 / 3.0, 1e-13);
  }
}

TEST(channel_at_distance, examples) {
  const FiberParams f = FiberParams::standard_telecom();
  const auto start = channel_at_distance(f, 0.0);
  EXPECT_EQ(start.eta(), 1.0);
  EXPECT_EQ(start.dist(), PauliDistribution::identity());

  const auto at100 = channel_at_distance(f, 100.0);
  EXPECT_NEAR(at100.eta(), 0.01, 1e-17);
  EXPECT_NEAR(at100.dist()[Pauli::Z], kP100, 1e-15);
  EXPECT_EQ(at100.dist()[Pauli::X], 0.0);

  const FiberParams d = depol(0.05, 1.0);
  const auto edge = channel_at_distance(d, max_distance_depolarizing(0.05, 1.0));
  EXPECT_NEAR(capacity_edp_upper(edge.eta(), pauli_probability(d, max_distance_depolarizing(0.05, 1.0))), 0.0, 1e-20);
  EXPECT_NEAR(edge.dist()[Pauli::X], edge.dist()[Pauli::Y], 1e-16);
}

TEST(channel_at_distance, dephasing_regime_never_reaches_zero_capacity) {
  const FiberParams f = FiberParams::standard_telecom();
  for (double d = 0.0; d <= 1500.0; d += 5.0) {
    const double p = pauli_probability(f, d);
    ASSERT_LT(p, 0.5);
    ASSERT_GT(capacity_edh(transmissivity(f, d), p), 0.0) << "d = " << d;
  }
}

TEST(channel_at_distance, depolarizing_crossing_matches_closed_form) {
  const FiberParams f = depol(0.05, 1.0);
  const double crossing =
      bisect([&](double d) { return pauli_probability(f, d) >= 2.0 / 3.0; }, 0.0, 1.0);
  EXPECT_EQ(capacity_edp_upper(transmissivity(f, crossing), pauli_probability(f, crossing)), 0.0);
  EXPECT_NEAR(crossing / (0.05 * std::log(3.0)), 1.0, 1e-9);
}
