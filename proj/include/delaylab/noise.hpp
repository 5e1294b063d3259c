// SPDX-License-Identifier: Apache-2.0
//
// Two-sided Wiener paths, the stationary Ornstein-Uhlenbeck conjugation
// process and the noise field z(theta_t omega) = sum_j g_j z_j.
//
// Every Gaussian draw is a pure function of (seed, component, absolute grid
// cell), so a shifted path theta_s omega replays exactly the same numbers
// as the original path read at an offset. Pullback runs depend on this.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "delaylab/space.hpp"

namespace delaylab {

/// Standard normal draw keyed by (seed, a, b). Counter-based; no state.
double keyed_normal(std::uint64_t seed, std::uint64_t a, std::int64_t b);

/// Uniform draw in (0, 1] keyed by (seed, a, b).
double keyed_uniform(std::uint64_t seed, std::uint64_t a, std::int64_t b);

/// Mixes a seed with a stream index; used to derive independent path seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class NoisePath {
 public:
  NoisePath(std::uint64_t seed, double step, std::size_t components, std::int64_t origin = 0);
  /// A path whose increments are all zero (deterministic limit).
  static NoisePath silent(double step, std::size_t components);

  std::uint64_t seed() const noexcept { return seed_; }
  double step() const noexcept { return step_; }
  std::size_t components() const noexcept { return components_; }
  /// theta_s offset in grid cells relative to the base path.
  std::int64_t origin() const noexcept { return origin_; }
  bool is_silent() const noexcept { return silent_; }

  /// w_j(t_{n+1}) - w_j(t_n) on this (possibly shifted) path.
  double wiener_increment(std::size_t j, std::int64_t n) const;
  /// The increment divided by sqrt(step).
  double standard_increment(std::size_t j, std::int64_t n) const;

  /// Grid index of time t; throws AlignmentError off the grid.
  std::int64_t grid_index(double t) const;

  NoisePath shifted_cells(std::int64_t cells) const;

 private:
  std::uint64_t seed_;
  double step_;
  std::size_t components_;
  std::int64_t origin_;
  bool silent_ = false;
};

/// theta_s: cell n of the result reads cell n + s/step of `path`.
NoisePath shift(const NoisePath& path, double s);

inline double wiener_increment(const NoisePath& path, std::size_t j, std::int64_t n) {
  return path.wiener_increment(j, n);
}

struct OUState {
  std::vector<double> values;  // z_j at `time`
  double mu = 1.0;
  double time = 0.0;
};

/// Exact OU transition over one grid cell:
/// z' = e^{-mu h} z + sqrt((1 - e^{-2 mu h}) / (2 mu)) * dW / sqrt(h).
OUState ou_step(const OUState& z, const NoisePath& path);

/// Approximates the stationary value z_j(theta_{t0} omega_j) by integrating
/// from zero at t0 - burn. The error is e^{-mu burn} times the initial
/// deviation.
OUState ou_pullback_init(const NoisePath& path, double t0, double burn, double mu);

/// Number of grid cells used for a burn-in of the given duration.
std::int64_t burn_cells(double burn, double step);

/// z_j on a window of grid indices [first, last] of a path.
///
/// The value at absolute cell a is defined canonically: a burn-in
/// initialization at the anchor floor(a / P) * P followed by exact OU steps.
/// It is therefore independent of the window it was computed in, and
/// consecutive values agree with ou_step up to e^{-mu burn}.
class OUTrace {
 public:
  static constexpr std::int64_t kAnchorPeriod = 256;

  OUTrace(const NoisePath& path, double mu, double burn, std::int64_t first, std::int64_t last);

  std::int64_t first() const noexcept { return first_; }
  std::int64_t last() const noexcept { return last_; }
  std::size_t components() const noexcept { return m_; }
  double mu() const noexcept { return mu_; }
  std::span<const double> at(std::int64_t n) const;
  double value(std::size_t j, std::int64_t n) const;
  OUState state(std::int64_t n, double step) const;

 private:
  std::int64_t first_;
  std::int64_t last_;
  std::size_t m_;
  double mu_;
  std::vector<double> values_;
};

/// Noise shapes g_j and A g_j in modal coordinates.
struct NoiseShape {
  std::vector<ModalVector> g;
  std::vector<ModalVector> Ag;

  /// One g_j per entry; each entry lists (mode, amplitude) pairs, modes 1-based.
  static NoiseShape from_modes(const SpectralDomain& dom,
                               const std::vector<std::vector<std::pair<std::size_t, double>>>& modes);

  std::size_t components() const noexcept { return g.size(); }
};

/// (z(theta_t omega), A z(theta_t omega)) = (sum_j z_j g_j, sum_j z_j A g_j).
std::pair<ModalVector, ModalVector> z_field(std::span<const double> z, const NoiseShape& shapes);
inline std::pair<ModalVector, ModalVector> z_field(const OUState& z, const NoiseShape& shapes) {
  return z_field(z.values, shapes);
}

struct TemperedRadiusReport {
  double r_hat = 0.0;                 // sup of sum_j |z_j|^2 over the window
  double at_origin = 0.0;             // sum_j |z_j(omega)|^2
  std::size_t window_violations = 0;  // grid times breaking sum|z|^2 <= e^{mu|t|/2} r_hat
  std::size_t delay_violations = 0;   // xi in [-tau, 0] breaking sum|z|^2 <= e^{mu tau/2} r_hat
  /// Smallest kappa >= 0 with sum|z(t)|^2 <= e^{kappa |t|} sum|z(0)|^2 on the
  /// window; +inf when z(omega) = 0 and the window is not identically zero.
  double min_exponent = 0.0;
  std::vector<double> times;
  std::vector<double> sums;
};

/// Scans the window t in [-horizon, horizon] of a burn-in initialized OU
/// trajectory.
TemperedRadiusReport tempered_radius(const NoisePath& path, double mu, double tau, double horizon,
                                     double burn);

/// e^{-beta t} r_hat(theta_{-t} omega) for each t in `times`.
std::vector<double> tempering_scan(const NoisePath& path, double mu, double tau, double horizon,
                                   double burn, double beta, std::span<const double> times);

}  // namespace delaylab
