// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "delaylab/errors.hpp"
#include "delaylab/segment.hpp"

using namespace delaylab;

TEST(Segment, NodesAndHead) {
  auto x = ProductState::zero(1.0, 4, 2);
  EXPECT_EQ(x.segment().node_count(), 5u);
  EXPECT_DOUBLE_EQ(x.segment().node_time(0), -1.0);
  EXPECT_DOUBLE_EQ(x.segment().node_time(4), 0.0);
  x.head()[1] = 3.0;
  EXPECT_EQ(x.segment().node(4)[1], 3.0);
  EXPECT_THROW(x.segment().node(5), IndexError);
}

TEST(Segment, ConstantStateNorm) {
  // ||(c, c)||^2 = tau |c|^2 + |c|^2.
  const ModalVector c(std::vector<double>{3.0, 4.0});
  const auto x = ProductState::constant(2.0, 8, c);
  EXPECT_NEAR(h_norm(x), std::sqrt(2.0 * 25.0 + 25.0), 1e-13);
  EXPECT_NEAR(project_P2(x)[0], 3.0, 0.0);
}

TEST(Segment, InnerProductOfLinearRamp) {
  // phi(s) = s on [-1, 0]: trapezoid of s^2 with M = 4 is 11/32, head 0.
  auto x = ProductState::zero(1.0, 4, 1);
  for (std::size_t i = 0; i <= 4; ++i) x.segment().node(i)[0] = x.segment().node_time(i);
  EXPECT_NEAR(h_inner(x, x), 11.0 / 32.0, 1e-15);
  EXPECT_NEAR(h_distance(x, ProductState::zero(1.0, 4, 1)), std::sqrt(11.0 / 32.0), 1e-15);
}

TEST(Segment, ShiftAppendAndEval) {
  auto x = ProductState::zero(1.0, 4, 1);
  for (std::size_t i = 0; i <= 4; ++i) x.segment().node(i)[0] = static_cast<double>(i);
  const double h5[] = {5.0};
  x.segment().shift_append(h5);
  for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(x.segment().node(i)[0], static_cast<double>(i + 1));
  EXPECT_NEAR(x.segment().eval(-0.125)[0], 4.5, 1e-15);
  EXPECT_THROW(x.segment().eval(0.1), DomainError);
}

TEST(Segment, AlignedSteps) {
  EXPECT_EQ(aligned_steps(1.0, 1.0 / 32.0), 32u);
  EXPECT_EQ(aligned_steps(0.0, 0.25), 0u);
  EXPECT_THROW(aligned_steps(0.3, 0.25), AlignmentError);
  EXPECT_THROW(aligned_steps(-0.25, 0.25), DomainError);
}

TEST(Segment, TildeSemigroupShiftsAndDecays) {
  const auto dom = SpectralDomain::dirichlet_laplacian(2);
  auto x = ProductState::zero(1.0, 4, 2);
  x.head()[0] = 1.0;
  x.head()[1] = 1.0;
  const auto y = tilde_semigroup_apply(dom, 0.5, x);
  EXPECT_NEAR(y.head()[0], std::exp(-0.5), 1e-15);
  EXPECT_NEAR(y.head()[1], std::exp(-2.0), 1e-15);
  // Node at s = -0.25 holds S(0.25) h.
  EXPECT_NEAR(y.segment().node(3)[0], std::exp(-0.25), 1e-15);
  // Node at s = -1 holds phi(-0.5) = 0.
  EXPECT_EQ(y.segment().node(0)[0], 0.0);
  EXPECT_THROW(tilde_semigroup_apply(dom, 0.1, x), AlignmentError);
}

TEST(Segment, ProjectionsAndGridMismatch) {
  auto a = ProductState::zero(1.0, 4, 2);
  auto b = ProductState::zero(1.0, 8, 2);
  EXPECT_THROW(h_inner(a, b), DimensionError);
  a.head()[0] = 2.0;
  EXPECT_EQ(project_P1(a).node(4)[0], 2.0);
  EXPECT_EQ(project_P2(a)[0], 2.0);
}
