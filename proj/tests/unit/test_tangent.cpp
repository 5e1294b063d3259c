// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "delaylab/errors.hpp"
#include "delaylab/tangent.hpp"
#include "helpers.hpp"

using namespace delaylab;
using dltest::make_model;

TEST(Tangent, OrthonormalizeRecordsStretch) {
  const Model m = make_model();
  TangentFrame f = TangentFrame::random(m, 4, 3);
  EXPECT_LT(f.gram_deviation(), 1e-14);
  f.vectors[0] *= 8.0;
  f.vectors[2] *= 0.5;
  const auto r = orthonormalize(f);
  EXPECT_NEAR(r.log_stretch[0], std::log(8.0), 1e-13);
  EXPECT_NEAR(r.log_stretch[1], 0.0, 1e-13);
  EXPECT_NEAR(r.log_stretch[2], std::log(0.5), 1e-13);
  EXPECT_EQ(r.reseeded, 0u);
  EXPECT_LT(f.gram_deviation(), 1e-14);
}

TEST(Tangent, UnderflowReseeds) {
  const Model m = make_model();
  TangentFrame f = TangentFrame::random(m, 3, 5);
  f.vectors[1] = m.zero_state();
  const auto r = orthonormalize(f);
  EXPECT_EQ(r.reseeded, 1u);
  EXPECT_NEAR(r.log_stretch[1], std::log(1e-300), 1e-9);
  EXPECT_LT(f.gram_deviation(), 1e-12);
}

TEST(Tangent, FiniteDifferenceAgreement) {
  const Model m = make_model();
  const auto p = m.make_path(2);
  const auto chi = dltest::random_state(m, 1, 0.5);
  const auto e = TangentFrame::random(m, 1, 4).vectors[0];
  const double d = 1e-6;
  auto fd = cocycle_psi(m, p, 1.0, chi + d * e) - cocycle_psi(m, p, 1.0, chi);
  fd *= 1.0 / d;
  const auto w = propagate_tangent(m, p, chi, e, 1.0);
  EXPECT_LT(h_distance(fd, w) / h_norm(w), 1e-5);
}

TEST(Tangent, LinearCaseIsItsOwnDerivative) {
  const Model m = make_model(0.25, 0.0, {});
  const auto p = m.make_path(1);
  const auto chi = dltest::random_state(m, 2);
  const auto e = dltest::random_state(m, 3);
  const auto w = propagate_tangent(m, p, chi, e, 2.0);
  EXPECT_LT(h_distance(w, cocycle_psi(m, p, 2.0, e)), 1e-14);
}

TEST(Tangent, HeadModeExponents) {
  const Model m = make_model(0.0, 0.0, {}, 4);
  const auto ex = lyapunov_exponents(m, m.make_path(1), m.zero_state(), TangentFrame::head_modes(m, 4), 5, 2);
  for (std::size_t k = 0; k < 4; ++k) {
    const double kk = static_cast<double>(k + 1);
    EXPECT_NEAR(ex[k], -kk * kk - 1.0, 1e-9);
  }
}

TEST(Tangent, DimensionBoundsHandExamples) {
  // q = (0.5, -0.5): d = 2; gamma = max(2*0.5 + 0.5, 0) / 0.5 = 3.
  auto r = dimension_bounds({{0.5, -0.5}});
  EXPECT_TRUE(r.established);
  EXPECT_EQ(r.d_H_bound, 2u);
  EXPECT_EQ(r.gamma_bound, 3.0);

  // Two paths; mean q = (1, -1, -4); path spread puts q_2 + 2 se above zero.
  r = dimension_bounds({{1.0, -0.2, -3.0}, {1.0, -1.8, -5.0}});
  EXPECT_EQ(r.d_H_bound, 3u);
  // Per path max_j (3 q_j - j q_3): path 1: max(6, 5.4, 0) = 6; path 2: max(8, 4.6, 0) = 8.
  EXPECT_NEAR(r.gamma_bound, 7.0 / 4.0, 1e-15);

  r = dimension_bounds({{1.0, 0.5}});
  EXPECT_FALSE(r.established);
  EXPECT_TRUE(std::isnan(r.gamma_bound));
  EXPECT_NE(r.message.find("m_max = 2"), std::string::npos);

  r = dimension_bounds({{-1.0, -3.0}});
  EXPECT_EQ(r.d_H_bound, 1u);
  EXPECT_EQ(r.gamma_bound, 0.0);
  EXPECT_THROW(dimension_bounds(std::vector<std::vector<double>>{}), DomainError);
  EXPECT_THROW(dimension_bounds({{1.0}, {1.0, 2.0}}), DimensionError);
}

TEST(Tangent, TraceRejectsNonOrthonormalFrame) {
  const Model m = make_model();
  TangentFrame f = TangentFrame::random(m, 2, 1);
  f.vectors[0] *= 2.0;
  EXPECT_THROW(trace_Q(m, m.zero_state(), f), NumericError);
  EXPECT_EQ(trace_Q(m, m.zero_state(), TangentFrame{}), 0.0);
}

TEST(Tangent, DifferentiabilitySlope) {
  const Model m = make_model();
  const auto p = m.make_path(3);
  const auto chi = dltest::random_state(m, 5, 0.3);
  const auto e = TangentFrame::random(m, 1, 6).vectors[0];
  const double h[] = {1e-2, 1e-3, 1e-4};
  const auto rep = differentiability_check(m, p, chi, e, h);
  EXPECT_NEAR(rep.slope, 2.0, 0.1);
  EXPECT_GE(rep.K_est, 1.0);
}

TEST(Tangent, EstimateQSmall) {
  const Model m = make_model();
  LyapunovOptions o;
  o.m = 3;
  o.intervals = 60;
  o.paths = 3;
  o.base_points = 4;
  o.workers = 2;
  const auto st = estimate_q(m, o);
  ASSERT_EQ(st.per_path_q.size(), 3u);
  for (const auto& q : st.per_path_q) {
    EXPECT_GT(q[0], q[1]);
    EXPECT_GT(q[1], q[2]);
  }
  o.workers = 1;
  EXPECT_EQ(estimate_q(m, o).per_path_q, st.per_path_q);
  o.intervals = 10;
  EXPECT_THROW(estimate_q(m, o), DomainError);
}
