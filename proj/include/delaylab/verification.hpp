// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks and invariant suite behind `verify`. Reference values
// come from oracles written independently of the integrator code paths:
// a Newton solver for the characteristic equation, a per-mode scalar
// recurrence for the affine stationary point, analytic OU moments and the
// hand-evaluated dimension formula.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "delaylab/config.hpp"
#include "delaylab/tangent.hpp"

namespace delaylab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t workers = 0;  // 0: hardware concurrency
};

namespace oracle {

/// Real root of lambda = -c + g e^{-lambda tau} by Newton's method from x0.
double delay_characteristic_root(double c, double g, double tau, double x0 = 0.0);

/// Time-0 state of the b = 0 scheme driven by `path`, computed mode by mode
/// with scalar recurrences from a zero history at -t0.
ProductState affine_stationary_point(const Model& model, const NoisePath& path, double t0);

/// gamma = E max_j (d q_j - j q_d) / (-E q_d) written out for explicit q rows.
double gamma_by_hand(const std::vector<std::vector<double>>& q_rows, std::size_t d);

}  // namespace oracle

/// Default desk-scale instance with overrides.
ExperimentConfig default_config();

CheckResult check_cocycle_exactness(const VerifyOptions& o);
CheckResult check_ou_statistics(const VerifyOptions& o);
CheckResult check_linear_spectrum(const VerifyOptions& o);
CheckResult check_delayed_linear(const VerifyOptions& o);
CheckResult check_tangent_fd(const VerifyOptions& o);
CheckResult check_differentiability_order(const VerifyOptions& o);
CheckResult check_absorption(const VerifyOptions& o);
CheckResult check_pullback_convergence(const VerifyOptions& o);
CheckResult check_dimension_bounds(const VerifyOptions& o);
CheckResult check_trace_identity(const VerifyOptions& o);

/// Criteria 1-10 in order.
std::vector<CheckResult> run_acceptance(const VerifyOptions& o);
/// Further invariants reported by `verify`.
std::vector<CheckResult> run_invariants(const VerifyOptions& o);

}  // namespace delaylab
