// SPDX-License-Identifier: Apache-2.0
//
// Pullback-ensemble approximation of the random attractor of Psi, the
// absorbing-ball diagnostics and a box-counting cross-check.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "delaylab/dynamics.hpp"

namespace delaylab {

/// Time-0 cloud Psi(T, theta_{-T} omega, B) for an initial family B.
struct AttractorSample {
  std::vector<ProductState> states;
  double pullback_time = 0.0;
  std::size_t n_initials = 0;
};

struct AbsorbingEstimate {
  double c = 0.0;                 // shape constant bounding p_1 by c sqrt(r_hat)
  double r_hat = 0.0;             // tempered radius of omega
  double growth_rate = 0.0;       // rho_op + L_f + |a|
  double ball_radius = 0.0;       // radius of the initial family
  double radius_limit = 0.0;      // radius without the c_1 term
  double c1 = 0.0;                // c_1(omega) at T_absorb
  double varpi = 0.0;             // bound on ||chi - Z|| over the initial family
  double radius_analytic = 0.0;   // radius_limit + c1
  double radius_empirical = 0.0;  // ensemble max H-norm at the end of the scan (fiber omega)
  double T_absorb = 0.0;
  bool absorbed = false;
  std::size_t violations = 0;  // (time, member) pairs above the analytic radius after T_absorb
  std::vector<double> times;      // elapsed pullback times of the scan
  std::vector<double> max_norms;  // ensemble max H-norm per scan time
  std::vector<double> radii;      // analytic radius per scan time
};

struct AbsorbingOptions {
  std::size_t ensemble = 256;
  double horizon = 20.0;       // half-width of the tempered-radius window
  double scan_time = 20.0;     // elapsed pullback time covered by the scan
  double ball_radius = 0.0;    // 0: use radius_limit (or 1 when that vanishes)
  std::uint64_t init_seed = 0x5eed;
  std::size_t workers = 1;
};

/// Constant c from the shapes: sum_j (||A g_j|| + (mu + L_f) sqrt(tau) e^{mu tau/4} ||g_j||).
double shape_constant(const Model& model);

/// Growth rate used by the absorbing estimate: rho_op + L_f + |a|.
double absorbing_growth_rate(const Model& model);

/// Analytic radius of the absorbing ball for a fiber with tempered radius
/// r_hat after elapsed pullback time t, starting from conjugated data of
/// norm at most `varpi`.
double absorbing_radius_at(const Model& model, double c, double r_hat, double varpi, double t);

AbsorbingEstimate absorbing_radius(const Model& model, const NoisePath& path,
                                   const AbsorbingOptions& options = {});

/// Deterministic initial family: n head-consistent states with H-norm at
/// most `radius`.
std::vector<ProductState> initial_family(const Model& model, std::size_t n, double radius,
                                         std::uint64_t seed);

/// One cloud per pullback time, all evolved from the same initial family
/// under the same noise path restricted to [-T, 0].
std::vector<AttractorSample> pullback_evolve(const Model& model, const NoisePath& path,
                                             std::span<const double> pullback_times,
                                             std::size_t n, double ball_radius,
                                             std::uint64_t init_seed = 0x5eed,
                                             std::size_t workers = 1);

/// sup_{a in A} inf_{b in B} ||a - b||_H.
double hausdorff_semidist(std::span<const ProductState> a, std::span<const ProductState> b);
double cloud_diameter(std::span<const ProductState> cloud);

struct BoxCountResult {
  double dimension = 0.0;
  bool degenerate = false;
  std::vector<double> eps;
  std::vector<double> counts;
};

/// Leading coordinates of a state: head modes first, then older segment
/// nodes.
std::vector<double> leading_coordinates(const ProductState& x, std::size_t k);

/// Least-squares slope of log N(eps) against log(1/eps) over occupied
/// boxes. An empty eps list selects spread * 2^-i, i = 2..6.
BoxCountResult box_counting_points(const std::vector<std::vector<double>>& points,
                                   std::span<const double> eps_list);
BoxCountResult box_counting_dim(const AttractorSample& sample, std::size_t k,
                                std::span<const double> eps_list);

}  // namespace delaylab
