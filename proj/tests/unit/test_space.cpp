// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "delaylab/errors.hpp"
#include "delaylab/space.hpp"

using namespace delaylab;

TEST(Space, DirichletEigenvalues) {
  const auto dom = SpectralDomain::dirichlet_laplacian(8);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(dom.eigenvalue(k), -static_cast<double>((k + 1) * (k + 1)));
  }
  EXPECT_EQ(dom.spectral_bound(), -1.0);
}

TEST(Space, ParsevalAgainstDirectSineSum) {
  const std::size_t n = 8;
  const auto dom = SpectralDomain::dirichlet_laplacian(n);
  ModalVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = std::cos(1.0 + static_cast<double>(k));
  const auto samples = dom.to_collocation(v.coeffs());
  // Direct synthesis sqrt(2/pi) sum_k v_k sin(k x_i) at x_i = i pi / (N+1).
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1) * std::numbers::pi / static_cast<double>(n + 1);
    double u = 0.0;
    for (std::size_t k = 0; k < n; ++k) u += v[k] * std::sqrt(2.0 / std::numbers::pi) * std::sin(static_cast<double>(k + 1) * x);
    EXPECT_NEAR(samples[i], u, 1e-12);
    sum += u * u;
  }
  EXPECT_NEAR(std::sqrt(dom.quadrature_weight() * sum), v.norm(), 1e-10);
}

TEST(Space, TransformRoundTrip) {
  const auto dom = SpectralDomain::dirichlet_laplacian(12);
  ModalVector v(12);
  for (std::size_t k = 0; k < 12; ++k) v[k] = 1.0 / static_cast<double>(k + 1);
  const auto back = dom.to_modal(dom.to_collocation(v.coeffs()));
  for (std::size_t k = 0; k < 12; ++k) EXPECT_NEAR(back[k], v[k], 1e-13);
}

TEST(Space, SemigroupIsDiagonalExponential) {
  const auto dom = SpectralDomain::dirichlet_laplacian(4);
  const ModalVector v(std::vector<double>{1.0, -2.0, 0.5, 3.0});
  const auto s = dom.semigroup_apply(0.3, v);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(s[k], std::exp(-0.3 * static_cast<double>((k + 1) * (k + 1))) * v[k], 1e-15);
  }
  const auto st = dom.semigroup_apply(0.1, dom.semigroup_apply(0.2, v));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(st[k], s[k], 1e-15);
  EXPECT_THROW(dom.semigroup_apply(-1.0, v), DomainError);
}

TEST(Space, Errors) {
  EXPECT_THROW(SpectralDomain::dirichlet_laplacian(0), ConfigError);
  EXPECT_THROW(SpectralDomain::with_eigenvalues({-1.0, -1.0}), ConfigError);
  EXPECT_THROW(ModalVector::unit(3, 0), IndexError);
  EXPECT_THROW(ModalVector::unit(3, 4), IndexError);
  EXPECT_THROW(ModalVector(2) + ModalVector(3), DimensionError);
  EXPECT_EQ(ModalVector::unit(3, 2)[1], 1.0);
}
