// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "delaylab/attractor.hpp"
#include "delaylab/errors.hpp"
#include "helpers.hpp"

using namespace delaylab;
using dltest::make_model;

namespace {

ProductState scalar_point(double head) {
  auto x = ProductState::zero(1.0, 2, 1);
  x.head()[0] = head;
  return x;
}

}  // namespace

TEST(Attractor, SemidistanceOnALine) {
  // Heads only: H-distance equals |head difference| * sqrt(1 + 1/4) with M = 2.
  const double w = std::sqrt(1.25);
  const std::vector<ProductState> a = {scalar_point(0.0), scalar_point(3.0)};
  const std::vector<ProductState> b = {scalar_point(1.0)};
  EXPECT_NEAR(hausdorff_semidist(a, b), 2.0 * w, 1e-14);
  EXPECT_NEAR(hausdorff_semidist(b, a), 1.0 * w, 1e-14);
  EXPECT_EQ(hausdorff_semidist(a, a), 0.0);
  EXPECT_NEAR(cloud_diameter(a), 3.0 * w, 1e-14);
  EXPECT_THROW(hausdorff_semidist(a, std::vector<ProductState>{}), DomainError);
}

TEST(Attractor, InitialFamilyInsideBall) {
  const Model m = make_model();
  const auto fam = initial_family(m, 64, 2.5, 7);
  ASSERT_EQ(fam.size(), 64u);
  for (const auto& x : fam) EXPECT_LE(h_norm(x), 2.5 * (1.0 + 1e-12));
  EXPECT_EQ(fam, initial_family(m, 64, 2.5, 7));
}

TEST(Attractor, LeadingCoordinates) {
  auto x = ProductState::zero(1.0, 2, 2);
  x.head()[0] = 1.0;
  x.head()[1] = 2.0;
  x.segment().node(1)[0] = 3.0;
  const auto c = leading_coordinates(x, 3);
  EXPECT_EQ(c, (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_THROW(leading_coordinates(x, 0), DimensionError);
  EXPECT_THROW(leading_coordinates(x, 7), DimensionError);
}

TEST(Attractor, BoxCountingKnownSets) {
  std::vector<std::vector<double>> line, square;
  for (int i = 0; i < 4096; ++i) line.push_back({i / 4095.0, 0.0});
  for (int i = 0; i < 128; ++i) {
    for (int j = 0; j < 128; ++j) square.push_back({i / 127.0, j / 127.0});
  }
  EXPECT_NEAR(box_counting_points(line, {}).dimension, 1.0, 0.1);
  EXPECT_NEAR(box_counting_points(square, {}).dimension, 2.0, 0.15);
  const auto single = box_counting_points({{1.0, 1.0}, {1.0, 1.0}}, {});
  EXPECT_TRUE(single.degenerate);
  EXPECT_EQ(single.dimension, 0.0);
}

TEST(Attractor, AbsorbingEstimateSanity) {
  const Model m = make_model();
  AbsorbingOptions o;
  o.ensemble = 32;
  const auto est = absorbing_radius(m, m.make_path(3), o);
  EXPECT_GT(est.c, 0.0);
  EXPECT_LT(est.growth_rate, 0.0);
  EXPECT_TRUE(est.absorbed);
  EXPECT_EQ(est.violations, 0u);
  EXPECT_LE(est.radius_empirical, est.radius_analytic);
  EXPECT_NEAR(est.radius_analytic, est.radius_limit + est.c1, 1e-12 * est.radius_analytic);
  // c1 decays with elapsed time.
  EXPECT_LE(absorbing_radius_at(m, est.c, est.r_hat, est.varpi, 50.0),
            absorbing_radius_at(m, est.c, est.r_hat, est.varpi, 1.0));
}

TEST(Attractor, ShapeConstantByHand) {
  // One shape 0.3 e_1: ||A g|| = 0.3, (mu + L_f) sqrt(tau) e^{mu tau / 4} ||g|| = 1.5 * e^{1/4} * 0.3.
  const Model m = make_model(0.25, 0.5, {{{1, 0.3}}});
  EXPECT_NEAR(shape_constant(m), 0.3 + 1.5 * std::exp(0.25) * 0.3, 1e-14);
}

TEST(Attractor, PullbackCloudsContract) {
  const Model m = make_model();
  const double T[] = {5.0, 10.0, 20.0};
  const auto clouds = pullback_evolve(m, m.make_path(4), T, 16, 3.0, 0x5eed, 2);
  ASSERT_EQ(clouds.size(), 3u);
  EXPECT_GT(cloud_diameter(clouds[0].states), cloud_diameter(clouds[2].states));
  EXPECT_LT(hausdorff_semidist(clouds[1].states, clouds[2].states),
            hausdorff_semidist(clouds[0].states, clouds[1].states));
}

TEST(Attractor, PullbackInvariance) {
  // Psi(1, theta_{-1} omega) maps the cloud on theta_{-1} omega onto the cloud on omega.
  const Model m = make_model();
  const auto p = m.make_path(9);
  const double T[] = {40.0};
  const auto before = pullback_evolve(m, shift(p, -1.0), T, 8, 3.0, 1, 1).front().states;
  const auto now = pullback_evolve(m, p, T, 8, 3.0, 1, 1).front().states;
  std::vector<ProductState> mapped;
  for (const auto& x : before) mapped.push_back(cocycle_psi(m, shift(p, -1.0), 1.0, x));
  EXPECT_LT(hausdorff_semidist(mapped, now), 1e-6);
}
