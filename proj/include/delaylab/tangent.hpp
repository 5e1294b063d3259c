// SPDX-License-Identifier: Apache-2.0
//
// Variational cocycle, unit-time linearization with QR re-orthonormalization,
// q_j statistics and the Hausdorff / fractal dimension bounds built on them.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "delaylab/attractor.hpp"
#include "delaylab/dynamics.hpp"

namespace delaylab {

/// m H-orthonormal perturbations.
struct TangentFrame {
  std::vector<ProductState> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  /// Largest |<u_i, u_j> - delta_ij|.
  double gram_deviation() const;

  /// Keyed random frame of m vectors, orthonormalized.
  static TangentFrame random(const Model& model, std::size_t m, std::uint64_t seed);
  /// Frame spanned by unit head modes 1..m (segment zero), orthonormalized.
  static TangentFrame head_modes(const Model& model, std::size_t m);
};

struct OrthoResult {
  std::vector<double> log_stretch;  // log of the MGS diagonal, per vector
  std::size_t reseeded = 0;         // vectors replaced after underflow
};

/// Modified Gram-Schmidt in H (two passes). A vector whose remaining norm
/// falls below 1e-300 is replaced by a fresh direction orthogonal to the
/// earlier ones and its log stretch is recorded as log(1e-300).
OrthoResult orthonormalize(TangentFrame& frame);

/// Advances `base` (a Psi state at grid index n0) and the frame by `steps`
/// grid steps along the same trajectory, then re-orthonormalizes.
OrthoResult propagate_frame(const Model& model, const NoiseLift& lift, std::int64_t n0,
                            std::size_t steps, ProductState& base, TangentFrame& frame,
                            Stepper& stepper);

/// One unit of time from grid index n0: D Psi(theta_{t_n0} omega) on the frame.
OrthoResult dpsi_unit(const Model& model, const NoiseLift& lift, std::int64_t n0,
                      ProductState& base, TangentFrame& frame, Stepper& stepper);
/// Convenience form starting at grid index 0 of `path`.
OrthoResult dpsi_unit(const Model& model, const NoisePath& path, ProductState& base,
                      TangentFrame& frame);

/// D Psi(t, omega, chi) w, by the variational equation.
ProductState propagate_tangent(const Model& model, const NoisePath& path, const ProductState& chi,
                               const ProductState& w, double t);

struct LyapunovOptions {
  std::size_t m = 6;
  std::size_t intervals = 200;  // K
  std::size_t warmup = 10;      // discarded unit intervals before K
  std::size_t paths = 32;
  std::size_t base_points = 32;
  std::uint64_t init_seed = 0x5eed;
  double pullback_time = 40.0;
  double ball_radius = 1.0;
  double convergence_tol = 1e-6;  // semidist(cloud(T), cloud(T/2))
  double dedup_tol = 1e-9;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

struct LyapunovStats {
  std::size_t m = 0;
  std::size_t K = 0;
  std::size_t warmup = 0;
  std::size_t n_paths = 0;
  /// per_path_q[p][j-1] = q_j for path p: max over base points of the
  /// cumulative ordered mean log stretch.
  std::vector<std::vector<double>> per_path_q;
  std::vector<std::vector<double>> per_path_q_half;  // same at K/2
  std::vector<std::vector<double>> per_path_exponents;  // ordered means, not cumulative
  std::vector<double> q_mean;
  std::vector<double> q_se;
  std::vector<double> q_half_mean;
  std::vector<std::size_t> base_points_unique;  // per path
  std::vector<double> base_q_spread;            // per path, max - min of q_m over base points
  std::vector<double> cloud_gap;                // per path, semidist(cloud(T), cloud(T/2))
  std::size_t base_points_sampled = 0;
  std::size_t reseeded = 0;
  bool converged = false;  // |q(K/2) - q(K)| <= 5% |q(K)| for every j
};

/// Single-trajectory log-stretch means over K unit intervals after warmup,
/// ordered nonincreasing; the frame starts as a keyed random frame.
std::vector<double> lyapunov_exponents(const Model& model, const NoisePath& path,
                                       const ProductState& chi, std::size_t m, std::size_t K,
                                       std::size_t warmup, std::uint64_t frame_seed);
/// Same from a given initial frame. A frame started on head modes stays
/// mode-pure under a diagonal linear flow, so exponents far below the
/// leading one stay resolvable there.
std::vector<double> lyapunov_exponents(const Model& model, const NoisePath& path,
                                       const ProductState& chi, TangentFrame frame, std::size_t K,
                                       std::size_t warmup);

/// Monte Carlo q_j statistics over an ensemble of paths. Throws NumericError
/// when a pullback cloud has not converged.
LyapunovStats estimate_q(const Model& model, const LyapunovOptions& options);

struct DimensionReport {
  std::vector<double> q_mean;
  std::vector<double> q_se;
  bool established = false;
  std::size_t d_H_bound = 0;  // smallest d with q_mean + 2 q_se < 0
  double gamma_bound = 0.0;
  double box_estimate = 0.0;
  bool box_degenerate = false;
  std::string message;
};

/// Dimension bounds from per-path cumulative q_j values.
DimensionReport dimension_bounds(const std::vector<std::vector<double>>& per_path_q);
DimensionReport dimension_bounds(const LyapunovStats& stats);

/// Tr(G Q_m) = sum_i <G u_i, u_i>_H with the discrete generator G at the Psi
/// state `base`. Throws NumericError when the frame is not orthonormal.
double trace_Q(const Model& model, const ProductState& base, const TangentFrame& frame);

struct TraceAverage {
  double trace_mean = 0.0;    // (1/K) int_0^K Tr(G Q_m) dt, left rectangle rule
  double stretch_mean = 0.0;  // (1/K) sum of log stretches over the frame
};

/// Both sides of the trace identity from one run of K unit intervals after
/// warmup, starting from `chi` at grid index 0.
TraceAverage trace_average(const Model& model, const NoisePath& path, const ProductState& chi,
                           TangentFrame frame, std::size_t K, std::size_t warmup);

struct DifferentiabilityReport {
  std::vector<double> scales;
  std::vector<double> remainders;
  std::vector<bool> used;  // false: remainder below the precision floor
  double slope = 0.0;      // NaN when fewer than two scales are usable
  double alpha = 0.0;      // slope - 1
  double K_est = 1.0;      // max r(h) / h^2 over used scales, floored at 1
};

/// Remainder r(h) = ||Psi(1, chi + h e) - Psi(1, chi) - h D Psi e|| for each h.
DifferentiabilityReport differentiability_check(const Model& model, const NoisePath& path,
                                                const ProductState& chi, const ProductState& e,
                                                std::span<const double> h_scales);

}  // namespace delaylab
