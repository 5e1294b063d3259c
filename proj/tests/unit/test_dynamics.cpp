// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "delaylab/errors.hpp"
#include "helpers.hpp"

using namespace delaylab;
using dltest::make_model;

TEST(Dynamics, RejectsLargeDelayWeight) {
  auto dom = SpectralDomain::dirichlet_laplacian(4);
  Model m(ModelParams{1.0, 2.0, 0.5, 1.0}, dom, NoiseShape{}, 32, 40.0);
  try {
    m.validate_hypotheses();
    FAIL() << "a = 2 accepted";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("||L|| <= mu"), std::string::npos) << e.what();
  }
}

TEST(Dynamics, AttractorPreconditions) {
  EXPECT_NO_THROW(make_model().validate_attractor_preconditions());
  // b = 2 gives rho + L_f = -1 + 2 > 0.
  try {
    make_model(0.25, 2.0).validate_attractor_preconditions();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("rho + L_f < 0"), std::string::npos) << e.what();
  }
}

TEST(Dynamics, DelayFreeLinearIsExact) {
  // a = b = 0, no noise: each head mode decays as e^{(lambda_k - mu) t} exactly.
  const Model m = make_model(0.0, 0.0, {});
  auto x = m.zero_state();
  for (std::size_t k = 0; k < 8; ++k) x.head()[k] = 1.0;
  const auto y = cocycle_psi(m, m.make_path(1), 1.0, x);
  for (std::size_t k = 0; k < 8; ++k) {
    const double kk = static_cast<double>(k + 1);
    EXPECT_NEAR(y.head()[k], std::exp(-kk * kk - 1.0), 1e-15 + 1e-13 * std::exp(-kk * kk - 1.0));
  }
}

TEST(Dynamics, ScalarDelayRecurrence) {
  // One mode, lambda = 0: independent scalar recurrence for the exponential Euler scheme.
  auto dom = SpectralDomain::with_eigenvalues({0.0});
  const double a = -0.25, mu = 1.0, h = 1.0 / 16.0;
  Model m(ModelParams{mu, a, 0.0, 1.0}, dom, NoiseShape{}, 16, 40.0);
  std::vector<double> u(17, 1.0);
  auto x = m.zero_state();
  for (std::size_t i = 0; i <= 16; ++i) x.segment().node(i)[0] = 1.0;
  for (int n = 0; n < 48; ++n) {
    const double nxt = std::exp(-mu * h) * u[u.size() - 1] - std::expm1(-mu * h) / mu * (-a * u[u.size() - 17]);
    u.push_back(nxt);
  }
  const auto y = cocycle_psi(m, m.make_path(1), 3.0, x);
  for (std::size_t i = 0; i <= 16; ++i) EXPECT_NEAR(y.segment().node(i)[0], u[u.size() - 17 + i], 1e-14);
}

TEST(Dynamics, CocyclePropertyBitwise) {
  const Model m = make_model();
  const auto p = m.make_path(5);
  const auto x = dltest::random_state(m, 3);
  for (double s : {0.25, 1.0, 2.5}) {
    for (double t : {0.5, 1.75}) {
      EXPECT_EQ(cocycle_psi(m, p, s + t, x), cocycle_psi(m, shift(p, s), t, cocycle_psi(m, p, s, x)));
      EXPECT_EQ(cocycle_phi(m, p, s + t, x), cocycle_phi(m, shift(p, s), t, cocycle_phi(m, p, s, x)));
    }
  }
}

TEST(Dynamics, ConjugationIdentity) {
  const Model m = make_model();
  const auto p = m.make_path(6);
  const auto chi = dltest::random_state(m, 4);
  for (double t : {0.5, 2.0, 7.0}) {
    auto v = cocycle_phi(m, p, t, chi - noise_lift_state(m, p, 0.0));
    v += noise_lift_state(m, p, t);
    EXPECT_LT(h_distance(v, cocycle_psi(m, p, t, chi)), 1e-12);
  }
}

TEST(Dynamics, MildStepAgreesWithStepper) {
  const Model m = make_model();
  const auto p = m.make_path(2);
  const auto v = dltest::random_state(m, 8);
  const auto lift = make_lift(m, p, 1);
  const auto a = mild_step(m, v, lift, 0, m.step());
  const auto b = cocycle_phi(m, p, m.step(), v);
  EXPECT_LT(h_distance(a, b), 1e-14);
  EXPECT_THROW(mild_step(m, v, lift, 0, 0.5 * m.step()), AlignmentError);
}

TEST(Dynamics, ZeroIsFixedWithoutNoise) {
  const Model m = make_model(0.25, 0.5, {});
  EXPECT_EQ(cocycle_psi(m, m.make_path(1), 5.0, m.zero_state()), m.zero_state());
}

TEST(Dynamics, NonlinearityOfConstantSegment) {
  // f(phi) = b tanh(mean of phi) pointwise; a constant modal history c gives b tanh(c(x)).
  const Model m = make_model(0.25, 0.5, {}, 4, 8);
  ModalVector c(4);
  c[0] = 0.8;
  c[2] = -0.3;
  const auto seg = ProductState::constant(1.0, 8, c).segment();
  const auto f = nonlinearity_f(m, seg);
  const auto& dom = m.domain();
  const auto cx = dom.to_collocation(c.coeffs());
  std::vector<double> fx(4);
  for (std::size_t i = 0; i < 4; ++i) fx[i] = 0.5 * std::tanh(cx[i]);
  const auto expect = dom.to_modal(fx);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(f[k], expect[k], 1e-14);
}

TEST(Dynamics, GridMismatchRejected) {
  const Model m = make_model();
  EXPECT_THROW(cocycle_psi(m, m.make_path(1), 1.0, ProductState::zero(1.0, 16, 8)), DimensionError);
  EXPECT_THROW(cocycle_psi(m, m.make_path(1), 0.1, m.zero_state()), AlignmentError);
}

TEST(Dynamics, TrajectoryRecordsEveryStep) {
  const Model m = make_model();
  const auto tr = integrate_psi(m, m.make_path(1), 1.0, m.zero_state());
  ASSERT_EQ(tr.states.size(), 33u);
  EXPECT_EQ(tr.states.back(), cocycle_psi(m, m.make_path(1), 1.0, m.zero_state()));
}
