// SPDX-License-Identifier: Apache-2.0
#include "delaylab/tangent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "delaylab/errors.hpp"
#include "delaylab/parallel.hpp"

namespace delaylab {

namespace {

constexpr double kUnderflow = 1e-300;

// Subtracts the components along frame[0..count) from v, twice.
void project_out(ProductState& v, const std::vector<ProductState>& frame, std::size_t count) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < count; ++j) v.axpy(-h_inner(v, frame[j]), frame[j]);
  }
}

// Deterministic replacement direction orthogonal to frame[0..count).
ProductState fresh_direction(const std::vector<ProductState>& frame, std::size_t count,
                             const ProductState& like) {
  const std::size_t size = like.size();
  for (std::size_t q = 0; q < size; ++q) {
    ProductState e = like;
    std::ranges::fill(e.data(), 0.0);
    e.data()[size - 1 - q] = 1.0;
    e *= 1.0 / h_norm(e);
    project_out(e, frame, count);
    const double r = h_norm(e);
    if (r > 0.5) return (1.0 / r) * e;
  }
  throw NumericError("no direction left to reseed the tangent frame");
}

double mean_of(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

}  // namespace

double TangentFrame::gram_deviation() const {
  double dev = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const double g = h_inner(vectors[i], vectors[j]) - (i == j ? 1.0 : 0.0);
      dev = std::max(dev, std::abs(g));
    }
  }
  return dev;
}

TangentFrame TangentFrame::random(const Model& model, std::size_t m, std::uint64_t seed) {
  TangentFrame f;
  for (std::size_t i = 0; i < m; ++i) {
    ProductState x = model.zero_state();
    auto d = x.data();
    for (std::size_t q = 0; q < d.size(); ++q) d[q] = keyed_normal(seed, i, static_cast<std::int64_t>(q));
    f.vectors.push_back(std::move(x));
  }
  orthonormalize(f);
  return f;
}

TangentFrame TangentFrame::head_modes(const Model& model, std::size_t m) {
  if (m > model.n_modes()) throw DimensionError("more head modes requested than the domain has");
  TangentFrame f;
  for (std::size_t i = 0; i < m; ++i) {
    ProductState x = model.zero_state();
    x.head()[i] = 1.0;
    f.vectors.push_back(std::move(x));
  }
  orthonormalize(f);
  return f;
}

OrthoResult orthonormalize(TangentFrame& frame) {
  OrthoResult res;
  auto& v = frame.vectors;
  for (std::size_t i = 0; i < v.size(); ++i) {
    project_out(v[i], v, i);
    const double r = h_norm(v[i]);
    if (!(r >= kUnderflow) || !std::isfinite(r)) {
      res.log_stretch.push_back(std::log(kUnderflow));
      v[i] = fresh_direction(v, i, v[i]);
      ++res.reseeded;
      continue;
    }
    res.log_stretch.push_back(std::log(r));
    v[i] *= 1.0 / r;
  }
  return res;
}

OrthoResult propagate_frame(const Model& model, const NoiseLift& lift, std::int64_t n0,
                            std::size_t steps, ProductState& base, TangentFrame& frame,
                            Stepper& stepper) {
  for (const auto& u : frame.vectors) {
    if (!u.segment().same_grid(base.segment())) throw DimensionError("tangent frame grid mismatch");
  }
  (void)model;
  // Re-orthonormalizing every step keeps stretch ratios within one step's
  // spread; the diagonal of the accumulated R is the product of the per-step
  // diagonals, so the logs add.
  OrthoResult total = orthonormalize(frame);
  for (std::size_t s = 0; s < steps; ++s) {
    for (auto& u : frame.vectors) stepper.tangent_step(u, base);
    stepper.psi_step(base, lift, n0 + static_cast<std::int64_t>(s));
    const OrthoResult r = orthonormalize(frame);
    for (std::size_t i = 0; i < r.log_stretch.size(); ++i) total.log_stretch[i] += r.log_stretch[i];
    total.reseeded += r.reseeded;
  }
  return total;
}

OrthoResult dpsi_unit(const Model& model, const NoiseLift& lift, std::int64_t n0,
                      ProductState& base, TangentFrame& frame, Stepper& stepper) {
  return propagate_frame(model, lift, n0, model.steps_per_unit(), base, frame, stepper);
}

OrthoResult dpsi_unit(const Model& model, const NoisePath& path, ProductState& base,
                      TangentFrame& frame) {
  NoiseLift lift = make_lift(model, path, model.steps_per_unit());
  Stepper stepper(model);
  return dpsi_unit(model, lift, 0, base, frame, stepper);
}

ProductState propagate_tangent(const Model& model, const NoisePath& path, const ProductState& chi,
                               const ProductState& w, double t) {
  model.validate_hypotheses();
  const std::size_t steps = aligned_steps(t, model.step());
  NoiseLift lift = make_lift(model, path, steps);
  Stepper stepper(model);
  ProductState base = chi;
  ProductState out = w;
  if (!out.segment().same_grid(base.segment())) throw DimensionError("tangent grid mismatch");
  for (std::size_t s = 0; s < steps; ++s) {
    stepper.tangent_step(out, base);
    stepper.psi_step(base, lift, static_cast<std::int64_t>(s));
  }
  return out;
}

namespace {

struct ExponentRun {
  std::vector<double> full;  // per-index means over K, unsorted
  std::vector<double> half;  // same over the first K/2
  std::size_t reseeded = 0;
};

ExponentRun run_exponents(const Model& model, const NoisePath& path, const ProductState& chi,
                          TangentFrame frame, std::size_t K, std::size_t warmup) {
  if (K == 0) throw DomainError("need at least one unit interval");
  const std::size_t m = frame.size();
  const std::size_t spu = model.steps_per_unit();
  NoiseLift lift = make_lift(model, path, (warmup + K) * spu);
  Stepper stepper(model);
  ProductState base = chi;
  ExponentRun run;
  run.full.assign(m, 0.0);
  run.half.assign(m, 0.0);
  const std::size_t half = std::max<std::size_t>(K / 2, 1);
  for (std::size_t k = 0; k < warmup + K; ++k) {
    const auto res =
        dpsi_unit(model, lift, static_cast<std::int64_t>(k * spu), base, frame, stepper);
    run.reseeded += res.reseeded;
    if (k < warmup) continue;
    for (std::size_t i = 0; i < m; ++i) {
      run.full[i] += res.log_stretch[i];
      if (k - warmup < half) run.half[i] += res.log_stretch[i];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    run.full[i] /= static_cast<double>(K);
    run.half[i] /= static_cast<double>(half);
  }
  return run;
}

std::vector<double> ordered(std::vector<double> x) {
  std::ranges::sort(x, std::greater<>());
  return x;
}

std::vector<double> cumulative(const std::vector<double>& x) {
  std::vector<double> out(x.size());
  std::partial_sum(x.begin(), x.end(), out.begin());
  return out;
}

void mean_and_se(const std::vector<std::vector<double>>& rows, std::vector<double>& mean,
                 std::vector<double>& se) {
  const std::size_t m = rows.front().size();
  const double n = static_cast<double>(rows.size());
  mean.assign(m, 0.0);
  se.assign(m, 0.0);
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < m; ++j) mean[j] += r[j] / n;
  }
  if (rows.size() < 2) return;
  for (std::size_t j = 0; j < m; ++j) {
    double ss = 0.0;
    for (const auto& r : rows) ss += (r[j] - mean[j]) * (r[j] - mean[j]);
    se[j] = std::sqrt(ss / (n - 1.0) / n);
  }
}

}  // namespace

std::vector<double> lyapunov_exponents(const Model& model, const NoisePath& path,
                                       const ProductState& chi, std::size_t m, std::size_t K,
                                       std::size_t warmup, std::uint64_t frame_seed) {
  return lyapunov_exponents(model, path, chi, TangentFrame::random(model, m, frame_seed), K, warmup);
}

std::vector<double> lyapunov_exponents(const Model& model, const NoisePath& path,
                                       const ProductState& chi, TangentFrame frame, std::size_t K,
                                       std::size_t warmup) {
  model.validate_hypotheses();
  return ordered(run_exponents(model, path, chi, std::move(frame), K, warmup).full);
}

LyapunovStats estimate_q(const Model& model, const LyapunovOptions& opt) {
  model.validate_attractor_preconditions();
  if (opt.intervals < 50) throw DomainError("estimate_q needs K >= 50 unit intervals");
  if (opt.m == 0 || opt.paths == 0 || opt.base_points == 0) {
    throw DomainError("estimate_q needs m, paths and base_points >= 1");
  }
  const std::size_t workers = resolve_workers(opt.workers);

  // Phase 1: pullback clouds at T/2 and T, one per path; deduplicated bases.
  std::vector<std::vector<ProductState>> bases(opt.paths);
  std::vector<double> gaps(opt.paths, 0.0);
  const double times[2] = {0.5 * opt.pullback_time, opt.pullback_time};
  parallel_for(opt.paths, workers, [&](std::size_t p, std::size_t) {
    const NoisePath path = model.make_path(derive_seed(opt.seed, p));
    auto clouds = pullback_evolve(model, path, times, opt.base_points, opt.ball_radius,
                                  opt.init_seed, 1);
    gaps[p] = hausdorff_semidist(clouds[1].states, clouds[0].states);
    for (auto& x : clouds[1].states) {
      const double tol = opt.dedup_tol * (1.0 + h_norm(x));
      const bool seen = std::ranges::any_of(
          bases[p], [&](const ProductState& y) { return h_distance(x, y) <= tol; });
      if (!seen) bases[p].push_back(std::move(x));
    }
  });
  for (std::size_t p = 0; p < opt.paths; ++p) {
    if (!(gaps[p] <= opt.convergence_tol)) {
      throw NumericError("attractor cloud not converged on path " + std::to_string(p) +
                         ": semidist(cloud(T), cloud(T/2)) = " + std::to_string(gaps[p]) +
                         " > " + std::to_string(opt.convergence_tol) +
                         "; increase the pullback time");
    }
  }

  // Phase 2: one exponent run per (path, base point).
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t p = 0; p < opt.paths; ++p) {
    for (std::size_t b = 0; b < bases[p].size(); ++b) tasks.emplace_back(p, b);
  }
  std::vector<ExponentRun> runs(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t t, std::size_t) {
    const auto [p, b] = tasks[t];
    const NoisePath path = model.make_path(derive_seed(opt.seed, p));
    const std::uint64_t frame_seed = derive_seed(opt.seed ^ 0xF7A3E5ULL, p * 65536 + b);
    runs[t] = run_exponents(model, path, bases[p][b],
                            TangentFrame::random(model, opt.m, frame_seed), opt.intervals,
                            opt.warmup);
  });

  LyapunovStats st;
  st.m = opt.m;
  st.K = opt.intervals;
  st.warmup = opt.warmup;
  st.n_paths = opt.paths;
  st.cloud_gap = gaps;
  st.base_points_sampled = opt.base_points;
  const double lowest = -std::numeric_limits<double>::infinity();
  st.per_path_q.assign(opt.paths, std::vector<double>(opt.m, lowest));
  st.per_path_q_half.assign(opt.paths, std::vector<double>(opt.m, lowest));
  st.per_path_exponents.assign(opt.paths, std::vector<double>(opt.m, lowest));
  st.base_q_spread.assign(opt.paths, 0.0);
  std::vector<double> q_min(opt.paths, std::numeric_limits<double>::infinity());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const std::size_t p = tasks[t].first;
    const auto ex = ordered(runs[t].full);
    const auto q = cumulative(ex);
    const auto qh = cumulative(ordered(runs[t].half));
    for (std::size_t j = 0; j < opt.m; ++j) {
      st.per_path_q[p][j] = std::max(st.per_path_q[p][j], q[j]);
      st.per_path_q_half[p][j] = std::max(st.per_path_q_half[p][j], qh[j]);
      st.per_path_exponents[p][j] = std::max(st.per_path_exponents[p][j], ex[j]);
    }
    q_min[p] = std::min(q_min[p], q.back());
    st.reseeded += runs[t].reseeded;
  }
  for (std::size_t p = 0; p < opt.paths; ++p) {
    st.base_points_unique.push_back(bases[p].size());
    st.base_q_spread[p] = st.per_path_q[p].back() - q_min[p];
  }
  mean_and_se(st.per_path_q, st.q_mean, st.q_se);
  std::vector<double> unused;
  mean_and_se(st.per_path_q_half, st.q_half_mean, unused);
  st.converged = true;
  for (std::size_t j = 0; j < opt.m; ++j) {
    if (std::abs(st.q_half_mean[j] - st.q_mean[j]) > 0.05 * std::abs(st.q_mean[j])) {
      st.converged = false;
    }
  }
  return st;
}

DimensionReport dimension_bounds(const std::vector<std::vector<double>>& per_path_q) {
  if (per_path_q.empty() || per_path_q.front().empty()) {
    throw DomainError("dimension_bounds needs at least one path and one q value");
  }
  const std::size_t m = per_path_q.front().size();
  for (const auto& r : per_path_q) {
    if (r.size() != m) throw DimensionError("per-path q tables have different lengths");
  }
  DimensionReport rep;
  mean_and_se(per_path_q, rep.q_mean, rep.q_se);
  for (std::size_t d = 1; d <= m; ++d) {
    if (rep.q_mean[d - 1] + 2.0 * rep.q_se[d - 1] < 0.0) {
      rep.established = true;
      rep.d_H_bound = d;
      break;
    }
  }
  if (!rep.established) {
    rep.message = "bound not established at this m_max = " + std::to_string(m);
    rep.gamma_bound = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  const std::size_t d = rep.d_H_bound;
  std::vector<double> worst;
  for (const auto& q : per_path_q) {
    double w = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= d; ++j) {
      w = std::max(w, static_cast<double>(d) * q[j - 1] - static_cast<double>(j) * q[d - 1]);
    }
    worst.push_back(w);
  }
  rep.gamma_bound = mean_of(worst) / (-rep.q_mean[d - 1]);
  return rep;
}

DimensionReport dimension_bounds(const LyapunovStats& stats) {
  return dimension_bounds(stats.per_path_q);
}

double trace_Q(const Model& model, const ProductState& base, const TangentFrame& frame) {
  if (frame.size() == 0) return 0.0;
  const double dev = frame.gram_deviation();
  if (!(dev <= 1e-8)) {
    throw NumericError("trace_Q: frame is not orthonormal (Gram deviation " +
                       std::to_string(dev) + ")");
  }
  const auto& seg = base.segment();
  const std::size_t n = seg.n_modes();
  const std::size_t last = seg.intervals();
  const double h = seg.spacing();
  const double mu = model.params().mu;
  const double a = model.params().a;
  Stepper stepper(model);
  std::vector<double> base_mean(n), u_mean(n), df(n);
  stepper.segment_mean(base, base_mean);

  double total = 0.0;
  for (const auto& u : frame.vectors) {
    if (!u.segment().same_grid(seg)) throw DimensionError("trace_Q: frame grid mismatch");
    auto d = u.data();
    double integral = 0.0;
    for (std::size_t i = 0; i < last; ++i) {
      const double* u0 = &d[i * n];
      const double* u1 = u0 + n;
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        // One-sided upwind quotient, third order where three forward nodes exist.
        double du;
        if (i + 3 <= last) {
          du = (-11.0 * u0[k] + 18.0 * u1[k] - 9.0 * u1[n + k] + 2.0 * u1[2 * n + k]) / (6.0 * h);
        } else if (i + 2 <= last) {
          du = (-3.0 * u0[k] + 4.0 * u1[k] - u1[n + k]) / (2.0 * h);
        } else {
          du = (u1[k] - u0[k]) / h;
        }
        dot += du * u0[k];
      }
      integral += seg.quadrature_weight(i) * dot;
    }
    stepper.segment_mean(u, u_mean);
    stepper.df_of_mean(base_mean, u_mean, df);
    double head = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double g = (model.domain().eigenvalue(k) - mu) * d[last * n + k] - a * d[k] + df[k];
      head += g * d[last * n + k];
    }
    total += integral + (seg.quadrature_weight(last) + 1.0) * head;
  }
  return total;
}

TraceAverage trace_average(const Model& model, const NoisePath& path, const ProductState& chi,
                           TangentFrame frame, std::size_t K, std::size_t warmup) {
  model.validate_hypotheses();
  if (K == 0) throw DomainError("trace_average needs K >= 1");
  const std::size_t spu = model.steps_per_unit();
  NoiseLift lift = make_lift(model, path, (warmup + K) * spu);
  Stepper stepper(model);
  ProductState base = chi;
  orthonormalize(frame);
  const double h = model.step();
  TraceAverage out;
  for (std::size_t k = 0; k < warmup + K; ++k) {
    const bool measure = k >= warmup;
    for (std::size_t s = 0; s < spu; ++s) {
      if (measure) {
        TangentFrame copy = frame;
        orthonormalize(copy);
        out.trace_mean += h * trace_Q(model, base, copy);
      }
      for (auto& u : frame.vectors) stepper.tangent_step(u, base);
      stepper.psi_step(base, lift, static_cast<std::int64_t>(k * spu + s));
    }
    const auto res = orthonormalize(frame);
    if (measure) {
      for (double l : res.log_stretch) out.stretch_mean += l;
    }
  }
  out.trace_mean /= static_cast<double>(K);
  out.stretch_mean /= static_cast<double>(K);
  return out;
}

DifferentiabilityReport differentiability_check(const Model& model, const NoisePath& path,
                                                const ProductState& chi, const ProductState& e,
                                                std::span<const double> h_scales) {
  model.validate_hypotheses();
  const double en = h_norm(e);
  if (!(en > 0.0)) throw DomainError("differentiability_check needs a nonzero direction");
  const ProductState dir = (1.0 / en) * e;
  const double t = 1.0;
  const ProductState base = cocycle_psi(model, path, t, chi);
  const ProductState tangent = propagate_tangent(model, path, chi, dir, t);
  const double floor = 1e-13 * std::max(1.0, h_norm(base));

  DifferentiabilityReport rep;
  std::vector<double> lx, ly;
  for (double hs : h_scales) {
    if (!(hs > 0.0)) throw DomainError("differentiability scales must be positive");
    ProductState moved = chi;
    moved.axpy(hs, dir);
    ProductState r = cocycle_psi(model, path, t, moved);
    r -= base;
    r.axpy(-hs, tangent);
    const double rem = h_norm(r);
    rep.scales.push_back(hs);
    rep.remainders.push_back(rem);
    const bool use = rem >= floor;
    rep.used.push_back(use);
    if (use) {
      lx.push_back(std::log(hs));
      ly.push_back(std::log(rem));
      rep.K_est = std::max(rep.K_est, rem / (hs * hs));
    }
  }
  if (lx.size() < 2) {
    rep.slope = std::numeric_limits<double>::quiet_NaN();
  } else {
    const double mx = mean_of(lx), my = mean_of(ly);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    rep.slope = sxy / sxx;
  }
  rep.alpha = rep.slope - 1.0;
  return rep;
}

}  // namespace delaylab
