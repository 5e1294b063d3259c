// SPDX-License-Identifier: Apache-2.0
//
// Model equation, conjugated drift and the exponential Euler integrator for
//
//   du = (A u - mu u - L u_t + f(u_t)) dt + sum_j g_j dw_j
//
// with L phi = a phi(-tau) and f(phi)(x) = b tanh((1/tau) int phi(s)(x) ds).
// The conjugated variable v = u - z(theta_t omega) solves a pathwise
// deterministic delay equation whose flow on H is the cocycle Phi; Psi is the
// same flow written in the original variable u.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "delaylab/noise.hpp"
#include "delaylab/segment.hpp"
#include "delaylab/space.hpp"

namespace delaylab {

struct ModelParams {
  double mu = 1.0;   // decay rate
  double a = 0.25;   // delayed linear feedback weight
  double b = 0.5;    // nonlinearity amplitude
  double tau = 1.0;  // delay

  /// Lipschitz constant of f from L^2([-tau, 0], X) to X.
  double lipschitz_f() const;
};

class Model {
 public:
  Model(ModelParams params, SpectralDomain domain, NoiseShape shapes, std::size_t intervals,
        double burn);

  const ModelParams& params() const noexcept { return params_; }
  const SpectralDomain& domain() const noexcept { return domain_; }
  const NoiseShape& shapes() const noexcept { return shapes_; }
  std::size_t intervals() const noexcept { return intervals_; }
  std::size_t n_modes() const noexcept { return domain_.n_modes(); }
  std::size_t noise_components() const noexcept { return shapes_.components(); }
  double step() const noexcept { return params_.tau / static_cast<double>(intervals_); }
  double burn() const noexcept { return burn_; }

  /// rho_op = max{0, 1/2 + s(A)} - mu.
  double rho_op() const;
  double lipschitz_f() const { return params_.lipschitz_f(); }

  /// Hypotheses A1-A2 as far as they constrain parameters.
  void validate_hypotheses() const;
  /// Preconditions of the absorbing-set estimate: rho_op < -mu/2 and
  /// rho_op + L_f < 0. Also checks the hypotheses.
  void validate_attractor_preconditions() const;

  NoisePath make_path(std::uint64_t seed) const;
  ProductState zero_state() const;

  std::span<const double> decay() const noexcept { return decay_; }
  std::span<const double> phi1() const noexcept { return phi1_; }
  /// Grid steps per unit time; throws AlignmentError when 1 is off the grid.
  std::size_t steps_per_unit() const;

 private:
  ModelParams params_;
  SpectralDomain domain_;
  NoiseShape shapes_;
  std::size_t intervals_;
  double burn_;
  std::vector<double> decay_;  // e^{(lambda_k - mu) h}
  std::vector<double> phi1_;   // (e^{(lambda_k - mu) h} - 1) / (lambda_k - mu)
};

/// z(theta_{t_n} omega) and A z(theta_{t_n} omega) in modal coordinates for
/// n in [first, last].
class NoiseLift {
 public:
  NoiseLift(const Model& model, const NoisePath& path, std::int64_t first, std::int64_t last);

  std::int64_t first() const noexcept { return trace_.first(); }
  std::int64_t last() const noexcept { return trace_.last(); }
  std::span<const double> z(std::int64_t n) const;
  std::span<const double> Az(std::int64_t n) const;
  const OUTrace& trace() const noexcept { return trace_; }

  /// Z(theta_{t_n} omega) = (z(theta_{t_n + .} omega), z(theta_{t_n} omega)).
  ProductState lift(std::int64_t n) const;
  /// Adds s * Z(theta_{t_n} omega) to x in place.
  void add_lift(ProductState& x, std::int64_t n, double s) const;

 private:
  OUTrace trace_;
  std::size_t n_modes_;
  std::size_t intervals_;
  double tau_;
  std::vector<double> z_;
  std::vector<double> az_;
};

/// Window of lift indices needed to take `steps` steps from grid index 0.
NoiseLift make_lift(const Model& model, const NoisePath& path, std::size_t steps);

ModalVector nonlinearity_f(const Model& model, const HistorySegment& seg);
ModalVector delay_operator_L(const ModelParams& params, const HistorySegment& seg);

/// f~ = A z(theta_t omega) - L z(theta_{t+.} omega) + f(v_t + z(theta_{t+.} omega)).
ModalVector conjugated_drift(const Model& model, const std::pair<ModalVector, ModalVector>& z_now,
                             const HistorySegment& z_seg, const HistorySegment& v_seg);

/// In-place steppers with reusable workspace. One per thread.
class Stepper {
 public:
  explicit Stepper(const Model& model);

  /// Conjugated state v at grid index n -> n + 1.
  void phi_step(ProductState& v, const NoiseLift& lift, std::int64_t n);
  /// Original-variable state u at grid index n -> n + 1. Each step is a pure
  /// function of (u, n), which makes the discrete Psi an exact cocycle.
  void psi_step(ProductState& u, const NoiseLift& lift, std::int64_t n);
  /// Linearization of psi_step (equivalently phi_step) at the Psi state
  /// `base`, applied to w in place.
  void tangent_step(ProductState& w, const ProductState& base);

  /// Pointwise mean (1/tau) int phi(s) ds, trapezoid rule.
  void segment_mean(const ProductState& x, std::span<double> out) const;
  /// b tanh(mean) mapped back to modal coordinates.
  void f_of_mean(std::span<const double> mean, std::span<double> out);
  /// b sech^2(base_mean) * mean pointwise, back in modal coordinates.
  void df_of_mean(std::span<const double> base_mean, std::span<const double> mean,
                  std::span<double> out);

 private:
  const Model* model_;
  std::vector<double> mean_;
  std::vector<double> mean2_;
  std::vector<double> colloc_;
  std::vector<double> colloc2_;
  std::vector<double> fval_;
  std::vector<double> head_;
};

/// One exponential Euler step of the conjugated equation.
ProductState mild_step(const Model& model, const ProductState& state, const NoiseLift& lift,
                       std::int64_t n, double h);

ProductState cocycle_phi(const Model& model, const NoisePath& path, double t,
                         const ProductState& init);
ProductState cocycle_psi(const Model& model, const NoisePath& path, double t,
                         const ProductState& init);

/// Z(theta_t omega) as a product state.
ProductState noise_lift_state(const Model& model, const NoisePath& path, double t);

struct Trajectory {
  std::vector<ProductState> states;
  std::vector<OUState> ou_trace;
  double t0 = 0.0;
  double t1 = 0.0;
};

/// Psi-trajectory from grid time 0 to t, every step recorded.
Trajectory integrate_psi(const Model& model, const NoisePath& path, double t,
                         const ProductState& init);

}  // namespace delaylab
