// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "delaylab/dynamics.hpp"

namespace dltest {

using Shapes = std::vector<std::vector<std::pair<std::size_t, double>>>;

inline delaylab::Model make_model(double a = 0.25, double b = 0.5, Shapes shapes = {{{1, 0.3}}, {{2, 0.1}}},
                                  std::size_t n = 8, std::size_t M = 32) {
  auto dom = delaylab::SpectralDomain::dirichlet_laplacian(n);
  auto sh = delaylab::NoiseShape::from_modes(dom, shapes);
  return delaylab::Model(delaylab::ModelParams{1.0, a, b, 1.0}, dom, sh, M, 40.0);
}

inline delaylab::ProductState random_state(const delaylab::Model& m, std::uint64_t seed, double scale = 1.0) {
  auto x = m.zero_state();
  auto d = x.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = scale * delaylab::keyed_normal(seed, 77, static_cast<std::int64_t>(i));
  }
  return x;
}

}  // namespace dltest
