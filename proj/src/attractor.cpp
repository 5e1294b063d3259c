// SPDX-License-Identifier: Apache-2.0
#include "delaylab/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "delaylab/errors.hpp"
#include "delaylab/parallel.hpp"

namespace delaylab {

double shape_constant(const Model& model) {
  const auto& p = model.params();
  const double lf = model.lipschitz_f();
  const double weight = (p.mu + lf) * std::sqrt(p.tau) * std::exp(0.25 * p.mu * p.tau);
  const auto& shapes = model.shapes();
  double c = 0.0;
  for (std::size_t j = 0; j < shapes.components(); ++j) {
    c += shapes.Ag[j].norm() + weight * shapes.g[j].norm();
  }
  return c;
}

double absorbing_growth_rate(const Model& model) {
  return model.rho_op() + model.lipschitz_f() + std::abs(model.params().a);
}

double absorbing_radius_at(const Model& model, double c, double r_hat, double varpi, double t) {
  const double g = absorbing_growth_rate(model);
  if (!(g < 0.0)) {
    throw NumericError("absorbing estimate needs rho_op + L_f + |a| < 0, got " + std::to_string(g));
  }
  const double L = model.lipschitz_f() + std::abs(model.params().a);
  const double root = std::sqrt(r_hat);
  const double tail = c * L * root / (-g);
  const double limit = 2.0 * c * root + tail;
  const double c1 = std::max(0.0, std::exp(g * t) * (varpi - tail));
  return limit + c1;
}

std::vector<ProductState> initial_family(const Model& model, std::size_t n, double radius,
                                         std::uint64_t seed) {
  if (radius < 0.0) throw DomainError("initial family radius must be nonnegative");
  std::vector<ProductState> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ProductState x = model.zero_state();
    auto d = x.data();
    for (std::size_t q = 0; q < d.size(); ++q) {
      d[q] = keyed_normal(seed, i, static_cast<std::int64_t>(q));
    }
    const double norm = h_norm(x);
    const double scale = radius * keyed_uniform(seed, i, -1);
    if (norm > 0.0) x *= scale / norm;
    out.push_back(std::move(x));
  }
  return out;
}

AbsorbingEstimate absorbing_radius(const Model& model, const NoisePath& path,
                                   const AbsorbingOptions& options) {
  model.validate_attractor_preconditions();
  if (options.ensemble == 0) throw DomainError("absorbing scan needs a nonempty ensemble");
  const double h = model.step();
  const auto& p = model.params();

  AbsorbingEstimate est;
  est.c = shape_constant(model);
  est.growth_rate = absorbing_growth_rate(model);
  est.r_hat = tempered_radius(path, p.mu, p.tau, options.horizon, model.burn()).r_hat;
  const double L = model.lipschitz_f() + std::abs(p.a);
  est.radius_limit = (2.0 * est.c + est.c * L / (-est.growth_rate)) * std::sqrt(est.r_hat);
  est.ball_radius = options.ball_radius > 0.0 ? options.ball_radius
                    : est.radius_limit > 0.0  ? est.radius_limit
                                              : 1.0;

  const auto S = static_cast<std::int64_t>(aligned_steps(options.scan_time, h));
  const auto half = static_cast<std::int64_t>(std::floor(options.horizon / h + 1e-9));

  // r_hat of every fiber theta_{t_g} omega, g in [-S, 0], by a window max.
  OUTrace trace(path, p.mu, model.burn(), -S - half, half);
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(S + 2 * half + 1));
  for (std::int64_t n = -S - half; n <= half; ++n) {
    double s = 0.0;
    for (double zj : trace.at(n)) s += zj * zj;
    sums.push_back(s);
  }
  std::vector<double> fiber_r(static_cast<std::size_t>(S + 1));
  for (std::int64_t s = 0; s <= S; ++s) {
    const auto lo = sums.begin() + s;
    fiber_r[static_cast<std::size_t>(s)] = *std::max_element(lo, lo + 2 * half + 1);
  }

  NoiseLift lift(model, path, -S - static_cast<std::int64_t>(model.intervals()), 0);
  est.varpi = est.ball_radius + h_norm(lift.lift(-S));

  const auto family = initial_family(model, options.ensemble, est.ball_radius, options.init_seed);
  const std::size_t cols = static_cast<std::size_t>(S + 1);
  std::vector<double> norms(options.ensemble * cols);
  const std::size_t workers = resolve_workers(options.workers);
  std::vector<Stepper> steppers(workers, Stepper(model));
  parallel_for(options.ensemble, workers, [&](std::size_t i, std::size_t w) {
    ProductState u = family[i];
    double* row = &norms[i * cols];
    row[0] = h_norm(u);
    for (std::int64_t s = 0; s < S; ++s) {
      steppers[w].psi_step(u, lift, -S + s);
      row[static_cast<std::size_t>(s + 1)] = h_norm(u);
    }
  });

  est.times.resize(cols);
  est.max_norms.assign(cols, 0.0);
  est.radii.resize(cols);
  for (std::size_t s = 0; s < cols; ++s) {
    est.times[s] = static_cast<double>(s) * h;
    for (std::size_t i = 0; i < options.ensemble; ++i) {
      est.max_norms[s] = std::max(est.max_norms[s], norms[i * cols + s]);
    }
    est.radii[s] = absorbing_radius_at(model, est.c, fiber_r[s], est.varpi, est.times[s]);
  }

  std::size_t first = cols;
  for (std::size_t s = 0; s < cols; ++s) {
    if (est.max_norms[s] <= est.radii[s]) {
      first = s;
      break;
    }
  }
  est.absorbed = first < cols;
  if (est.absorbed) {
    est.T_absorb = est.times[first];
    for (std::size_t s = first; s < cols; ++s) {
      for (std::size_t i = 0; i < options.ensemble; ++i) {
        if (norms[i * cols + s] > est.radii[s]) ++est.violations;
      }
    }
  } else {
    est.T_absorb = std::numeric_limits<double>::infinity();
  }
  const double t_c1 = est.absorbed ? est.T_absorb : options.scan_time;
  const double tail = est.c * L * std::sqrt(est.r_hat) / (-est.growth_rate);
  est.c1 = std::max(0.0, std::exp(est.growth_rate * t_c1) * (est.varpi - tail));
  est.radius_analytic = est.radius_limit + est.c1;
  est.radius_empirical = est.max_norms.back();
  return est;
}

std::vector<AttractorSample> pullback_evolve(const Model& model, const NoisePath& path,
                                             std::span<const double> pullback_times,
                                             std::size_t n, double ball_radius,
                                             std::uint64_t init_seed, std::size_t workers) {
  model.validate_hypotheses();
  if (n == 0) throw DomainError("pullback ensemble must be nonempty");
  std::vector<std::int64_t> steps;
  std::int64_t longest = 0;
  for (double T : pullback_times) {
    steps.push_back(static_cast<std::int64_t>(aligned_steps(T, model.step())));
    longest = std::max(longest, steps.back());
  }
  NoiseLift lift(model, path, -longest - static_cast<std::int64_t>(model.intervals()), 0);
  const auto family = initial_family(model, n, ball_radius, init_seed);

  std::vector<AttractorSample> out(pullback_times.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    out[t].pullback_time = static_cast<double>(steps[t]) * model.step();
    out[t].n_initials = n;
    out[t].states.assign(n, model.zero_state());
  }
  workers = resolve_workers(workers);
  std::vector<Stepper> steppers(workers, Stepper(model));
  parallel_for(out.size() * n, workers, [&](std::size_t task, std::size_t w) {
    const std::size_t t = task / n;
    const std::size_t i = task % n;
    ProductState u = family[i];
    for (std::int64_t k = -steps[t]; k < 0; ++k) steppers[w].psi_step(u, lift, k);
    out[t].states[i] = std::move(u);
  });
  return out;
}

double hausdorff_semidist(std::span<const ProductState> a, std::span<const ProductState> b) {
  if (a.empty() || b.empty()) throw DomainError("hausdorff_semidist: empty state set");
  double sup = 0.0;
  for (const auto& x : a) {
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& y : b) {
      inf = std::min(inf, h_distance(x, y));
      if (inf == 0.0) break;
    }
    sup = std::max(sup, inf);
  }
  return sup;
}

double cloud_diameter(std::span<const ProductState> cloud) {
  double d = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) d = std::max(d, h_distance(cloud[i], cloud[j]));
  }
  return d;
}

std::vector<double> leading_coordinates(const ProductState& x, std::size_t k) {
  if (k == 0 || k > x.size()) {
    throw DimensionError("projection dimension " + std::to_string(k) + " outside 1.." +
                         std::to_string(x.size()));
  }
  const auto& seg = x.segment();
  std::vector<double> out;
  out.reserve(k);
  for (std::size_t i = seg.intervals() + 1; i-- > 0 && out.size() < k;) {
    for (double v : seg.node(i)) {
      if (out.size() == k) break;
      out.push_back(v);
    }
  }
  return out;
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

BoxCountResult box_counting_points(const std::vector<std::vector<double>>& points,
                                   std::span<const double> eps_list) {
  if (points.empty()) throw DomainError("box counting needs at least one point");
  const std::size_t k = points.front().size();
  std::vector<double> lo(k, std::numeric_limits<double>::infinity());
  std::vector<double> hi(k, -std::numeric_limits<double>::infinity());
  for (const auto& pt : points) {
    if (pt.size() != k) throw DimensionError("box counting points have mixed dimensions");
    for (std::size_t d = 0; d < k; ++d) {
      lo[d] = std::min(lo[d], pt[d]);
      hi[d] = std::max(hi[d], pt[d]);
    }
  }
  double spread = 0.0, scale = 0.0;
  for (std::size_t d = 0; d < k; ++d) {
    spread = std::max(spread, hi[d] - lo[d]);
    scale = std::max({scale, std::abs(lo[d]), std::abs(hi[d])});
  }

  BoxCountResult res;
  if (spread <= 1e-12 * (1.0 + scale)) {
    res.degenerate = true;
    return res;
  }
  if (eps_list.empty()) {
    for (int i = 2; i <= 6; ++i) res.eps.push_back(spread * std::ldexp(1.0, -i));
  } else {
    res.eps.assign(eps_list.begin(), eps_list.end());
  }
  if (res.eps.size() < 3) throw DomainError("box counting needs at least 3 scales");
  for (std::size_t i = 0; i < res.eps.size(); ++i) {
    if (!(res.eps[i] > 0.0) || (i > 0 && !(res.eps[i] < res.eps[i - 1]))) {
      throw DomainError("box counting scales must be positive and strictly decreasing");
    }
  }

  std::vector<double> x, y;
  for (double eps : res.eps) {
    std::set<std::vector<std::int64_t>> boxes;
    std::vector<std::int64_t> key(k);
    for (const auto& pt : points) {
      for (std::size_t d = 0; d < k; ++d) {
        key[d] = static_cast<std::int64_t>(std::floor((pt[d] - lo[d]) / eps));
      }
      boxes.insert(key);
    }
    res.counts.push_back(static_cast<double>(boxes.size()));
    x.push_back(std::log(1.0 / eps));
    y.push_back(std::log(static_cast<double>(boxes.size())));
  }
  res.dimension = ls_slope(x, y);
  return res;
}

BoxCountResult box_counting_dim(const AttractorSample& sample, std::size_t k,
                                std::span<const double> eps_list) {
  if (sample.states.empty()) throw DomainError("box counting on an empty sample");
  std::vector<std::vector<double>> pts;
  pts.reserve(sample.states.size());
  for (const auto& s : sample.states) pts.push_back(leading_coordinates(s, k));
  return box_counting_points(pts, eps_list);
}

}  // namespace delaylab
