// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "delaylab/errors.hpp"
#include "delaylab/noise.hpp"

using namespace delaylab;

TEST(Noise, KeyedDrawsArePure) {
  EXPECT_EQ(keyed_normal(1, 2, 3), keyed_normal(1, 2, 3));
  EXPECT_NE(keyed_normal(1, 2, 3), keyed_normal(1, 2, 4));
  EXPECT_NE(keyed_normal(1, 2, 3), keyed_normal(2, 2, 3));
  for (std::int64_t i = 0; i < 1000; ++i) {
    const double u = keyed_uniform(9, 0, i);
    EXPECT_GT(u, 0.0);
    EXPECT_LE(u, 1.0);
  }
}

TEST(Noise, NormalMoments) {
  const int n = 200000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = keyed_normal(5, 0, i);
    s += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
}

TEST(Noise, ShiftReadsOffsetCells) {
  const NoisePath p(3, 0.25, 2);
  const NoisePath q = shift(p, 1.0);
  for (std::int64_t n = -8; n < 8; ++n) {
    EXPECT_EQ(q.wiener_increment(1, n), p.wiener_increment(1, n + 4));
  }
  EXPECT_EQ(shift(shift(p, 0.5), -1.25).origin(), shift(p, -0.75).origin());
  EXPECT_THROW(shift(p, 0.1), AlignmentError);
  EXPECT_THROW(p.wiener_increment(2, 0), IndexError);
}

TEST(Noise, SilentPath) {
  const auto p = NoisePath::silent(0.1, 2);
  EXPECT_TRUE(p.is_silent());
  EXPECT_EQ(p.wiener_increment(0, 17), 0.0);
}

TEST(Noise, OUStepExactTransition) {
  // z' = e^{-mu h} z + sqrt((1 - e^{-2 mu h}) / (2 mu)) xi with xi the standard increment.
  const NoisePath p(11, 0.125, 1);
  OUState z{{0.7}, 2.0, 0.0};
  const OUState z1 = ou_step(z, p);
  const double h = 0.125, mu = 2.0;
  const double expect = std::exp(-mu * h) * 0.7 +
                        std::sqrt((1.0 - std::exp(-2.0 * mu * h)) / (2.0 * mu)) * p.standard_increment(0, 0);
  EXPECT_NEAR(z1.values[0], expect, 1e-15);
  EXPECT_DOUBLE_EQ(z1.time, 0.125);
}

TEST(Noise, TraceMatchesChainedSteps) {
  const NoisePath p(21, 1.0 / 32.0, 2);
  const OUTrace tr(p, 1.0, 40.0, -300, 300);
  OUState z = ou_pullback_init(p, -300.0 / 32.0, 40.0, 1.0);
  for (std::int64_t n = -300; n <= 300; ++n) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(tr.value(j, n), z.values[j], 1e-15);
    z = ou_step(z, p);
  }
  EXPECT_THROW(tr.value(0, 301), IndexError);
}

TEST(Noise, TraceIsWindowIndependent) {
  const NoisePath p(4, 1.0 / 32.0, 1);
  const OUTrace a(p, 1.0, 40.0, -10, 10);
  const OUTrace b(p, 1.0, 40.0, -600, 600);
  for (std::int64_t n = -10; n <= 10; ++n) EXPECT_EQ(a.value(0, n), b.value(0, n));
}

TEST(Noise, ZFieldCombinesShapes) {
  const auto dom = SpectralDomain::dirichlet_laplacian(3);
  const auto shapes = NoiseShape::from_modes(dom, {{{1, 0.5}}, {{2, 2.0}, {3, 1.0}}});
  const double z[] = {2.0, -1.0};
  const auto [zf, az] = z_field(z, shapes);
  EXPECT_DOUBLE_EQ(zf[0], 1.0);
  EXPECT_DOUBLE_EQ(zf[1], -2.0);
  EXPECT_DOUBLE_EQ(zf[2], -1.0);
  EXPECT_DOUBLE_EQ(az[1], 8.0);
  EXPECT_DOUBLE_EQ(az[2], 9.0);
  EXPECT_THROW(NoiseShape::from_modes(dom, {{{4, 1.0}}}), ConfigError);
}

TEST(Noise, TemperedRadiusBoundsTheWindow) {
  const NoisePath p(8, 1.0 / 32.0, 2);
  const auto rep = tempered_radius(p, 1.0, 1.0, 20.0, 40.0);
  EXPECT_EQ(rep.window_violations, 0u);
  EXPECT_EQ(rep.delay_violations, 0u);
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    EXPECT_LE(rep.sums[i], std::exp(0.5 * std::abs(rep.times[i])) * rep.r_hat * (1.0 + 1e-12));
  }
  EXPECT_LE(rep.at_origin, rep.r_hat);
  EXPECT_THROW(tempered_radius(p, 1.0, 1.0, -1.0, 40.0), DomainError);
}

TEST(Noise, TemperingScanDecays) {
  const NoisePath p(8, 1.0 / 32.0, 2);
  const double times[] = {0.0, 50.0, 100.0};
  const auto s = tempering_scan(p, 1.0, 1.0, 20.0, 40.0, 0.1, times);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_LT(s[2], s[0]);
}
