// SPDX-License-Identifier: Apache-2.0
#include "delaylab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "delaylab/errors.hpp"
#include "delaylab/parallel.hpp"

namespace delaylab {

namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

ProductState random_state(const Model& model, std::uint64_t seed, std::uint64_t stream,
                          double scale) {
  ProductState x = model.zero_state();
  auto d = x.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = scale * keyed_normal(seed, stream, static_cast<std::int64_t>(i));
  }
  return x;
}

ProductState unit_direction(const Model& model, std::uint64_t seed, std::uint64_t stream) {
  ProductState e = random_state(model, seed, stream, 1.0);
  e *= 1.0 / h_norm(e);
  return e;
}

Model model_from(const ExperimentConfig& cfg) { return build_model(cfg); }

// A point of the default attractor on fiber `path`.
ProductState attractor_point(const Model& model, const NoisePath& path, std::size_t workers) {
  const double T[] = {40.0};
  return pullback_evolve(model, path, T, 1, 1.0, 0x5eed, workers).front().states.front();
}

}  // namespace

namespace oracle {

double delay_characteristic_root(double c, double g, double tau, double x0) {
  double x = x0;
  for (int it = 0; it < 100; ++it) {
    const double e = g * std::exp(-x * tau);
    const double F = x + c - e;
    const double dF = 1.0 + tau * e;
    const double dx = F / dF;
    x -= dx;
    if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

ProductState affine_stationary_point(const Model& model, const NoisePath& path, double t0) {
  const double h = model.step();
  const double mu = model.params().mu;
  const double a = model.params().a;
  const std::size_t M = model.intervals();
  const std::size_t N = model.n_modes();
  const auto steps = static_cast<std::int64_t>(std::llround(t0 / h));
  const std::int64_t n0 = -steps - static_cast<std::int64_t>(M);

  // z_j(n) along one continuous OU chain started at n0.
  const std::size_t m = model.noise_components();
  std::vector<std::vector<double>> zj;
  OUState z = ou_pullback_init(path, static_cast<double>(n0) * h, model.burn(), mu);
  for (std::int64_t n = n0; n <= 0; ++n) {
    zj.push_back(z.values);
    if (n < 0) z = ou_step(z, path);
  }
  auto zmode = [&](std::int64_t n, std::size_t k) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += zj[static_cast<std::size_t>(n - n0)][j] * model.shapes().g[j][k];
    return s;
  };

  ProductState out = model.zero_state();
  for (std::size_t k = 0; k < N; ++k) {
    const double lam = model.domain().eigenvalue(k);
    const double r = (lam - mu) * h;
    const double decay = std::exp(r);
    const double p1 = std::expm1(r) / (lam - mu);
    // Zero history on [n0, n0 + M], then the scalar recurrence.
    std::vector<double> u(static_cast<std::size_t>(-n0) + 1, 0.0);
    for (std::int64_t n = n0 + static_cast<std::int64_t>(M); n < 0; ++n) {
      const auto i = static_cast<std::size_t>(n - n0);
      const double zn = zmode(n, k);
      u[i + 1] = decay * (u[i] - zn) + p1 * (-a * u[i - M] + lam * zn) + zmode(n + 1, k);
    }
    for (std::size_t node = 0; node <= M; ++node) {
      out.segment().node(node)[k] = u[u.size() - 1 - M + node];
    }
  }
  return out;
}

double gamma_by_hand(const std::vector<std::vector<double>>& q_rows, std::size_t d) {
  double worst = 0.0;
  double qd = 0.0;
  for (const auto& q : q_rows) {
    double w = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= d; ++j) {
      w = std::max(w, static_cast<double>(d) * q[j - 1] - static_cast<double>(j) * q[d - 1]);
    }
    worst += w;
    qd += q[d - 1];
  }
  const double n = static_cast<double>(q_rows.size());
  return (worst / n) / (-qd / n);
}

}  // namespace oracle

ExperimentConfig default_config() { return ExperimentConfig{}; }

CheckResult check_cocycle_exactness(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  const double h = model.step();
  constexpr std::size_t kTriples = 100;
  std::vector<char> phi_ok(kTriples), psi_ok(kTriples);
  parallel_for(kTriples, o.workers, [&](std::size_t i, std::size_t) {
    const auto is = static_cast<std::int64_t>(i);
    const double s = h * std::floor(1.0 + 96.0 * keyed_uniform(o.seed, 0xC0C1, is));
    const double t = h * std::floor(1.0 + 96.0 * keyed_uniform(o.seed, 0xC0C2, is));
    const ProductState x = random_state(model, o.seed, 0xC0C3 + i, 1.0);
    const NoisePath moved = shift(path, s);
    phi_ok[i] = cocycle_phi(model, path, t + s, x) ==
                cocycle_phi(model, moved, t, cocycle_phi(model, path, s, x));
    psi_ok[i] = cocycle_psi(model, path, t + s, x) ==
                cocycle_psi(model, moved, t, cocycle_psi(model, path, s, x));
  });
  const auto np = std::count(phi_ok.begin(), phi_ok.end(), 1);
  const auto ns = std::count(psi_ok.begin(), psi_ok.end(), 1);
  return {"cocycle_exactness", np == static_cast<long>(kTriples) && ns == static_cast<long>(kTriples),
          "Phi bitwise " + std::to_string(np) + "/100, Psi bitwise " + std::to_string(ns) + "/100"};
}

CheckResult check_ou_statistics(const VerifyOptions& o) {
  const ExperimentConfig cfg = default_config();
  const Model model = model_from(cfg);
  const double mu = model.params().mu;
  const double h = model.step();
  const std::size_t m = model.noise_components();
  constexpr std::size_t kSeeds = 100000;
  std::vector<double> samples(kSeeds * m);
  parallel_for(kSeeds, o.workers, [&](std::size_t i, std::size_t) {
    const NoisePath p(derive_seed(o.seed, 0x0F00000 + i), h, m);
    const OUState z = ou_pullback_init(p, 0.0, model.burn(), mu);
    for (std::size_t j = 0; j < m; ++j) samples[i * m + j] = z.values[j];
  });
  const double target = 1.0 / (2.0 * mu);
  const double n = static_cast<double>(kSeeds);
  const double sigma = target * std::sqrt(2.0 / (n - 1.0));
  bool pass = true;
  std::string detail;
  for (std::size_t j = 0; j < m; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < kSeeds; ++i) mean += samples[i * m + j];
    mean /= n;
    double var = 0.0;
    for (std::size_t i = 0; i < kSeeds; ++i) {
      const double d = samples[i * m + j] - mean;
      var += d * d;
    }
    var /= n - 1.0;
    const double dev = std::abs(var - target) / sigma;
    pass = pass && dev <= 3.0;
    detail += "var_z" + std::to_string(j + 1) + " = " + fmt("%.5f", var) + " (" +
              fmt("%.2f", dev) + " sigma); ";
  }

  const NoisePath path = model.make_path(o.seed);
  const double horizon = cfg.horizon;
  const double r_hat = tempered_radius(path, mu, model.params().tau, horizon, model.burn()).r_hat;
  std::vector<double> times;
  for (int t = 10; t <= 100; t += 10) times.push_back(t);
  const auto scan = tempering_scan(path, mu, model.params().tau, horizon, model.burn(), 0.1, times);
  const bool tempered = scan.back() < r_hat / 10.0;
  detail += "e^{-0.1 t} r_hat(theta_{-t} omega) at t = 100: " + sci(scan.back()) +
            " vs r_hat/10 = " + sci(r_hat / 10.0);
  return {"ou_statistics", pass && tempered, detail};
}

CheckResult check_linear_spectrum(const VerifyOptions& o) {
  ExperimentConfig cfg = default_config();
  cfg.model.a = 0.0;
  cfg.model.b = 0.0;
  cfg.shapes.clear();
  const Model model = model_from(cfg);
  const NoisePath path = model.make_path(o.seed);
  const std::size_t n = model.n_modes();
  const auto ex = lyapunov_exponents(model, path, model.zero_state(),
                                     TangentFrame::head_modes(model, n), 20, 10);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k + 1);
    worst = std::max(worst, std::abs(ex[k] - (-kk * kk - model.params().mu)));
  }
  return {"linear_spectrum", worst <= 1e-6,
          "max |exponent_k + k^2 + mu| over k = 1.." + std::to_string(n) + " = " + sci(worst)};
}

CheckResult check_delayed_linear(const VerifyOptions& o) {
  ExperimentConfig cfg = default_config();
  cfg.n_modes = 1;
  cfg.op = "explicit";
  cfg.eigenvalues = {0.0};
  cfg.model.a = -0.25;
  cfg.model.b = 0.0;
  cfg.history_nodes = 64;
  cfg.shapes.clear();
  const Model model = model_from(cfg);
  const NoisePath path = model.make_path(o.seed);
  ProductState chi = model.zero_state();
  chi.head()[0] = 1.0;
  const double ex = lyapunov_exponents(model, path, chi, 1, 200, 10, o.seed)[0];
  const double root = oracle::delay_characteristic_root(1.0, 0.25, 1.0, 0.0);
  const double err = std::abs(ex - root);
  return {"delayed_linear", err <= 2e-2,
          "exponent " + fmt("%.6f", ex) + " vs Newton root " + fmt("%.6f", root) + ", |diff| = " +
              sci(err)};
}

CheckResult check_tangent_fd(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  const ProductState chi = attractor_point(model, path, o.workers);
  const ProductState base = cocycle_psi(model, path, 1.0, chi);
  constexpr std::size_t kDirs = 50;
  constexpr double kDelta = 1e-6;
  std::vector<double> rel(kDirs);
  parallel_for(kDirs, o.workers, [&](std::size_t i, std::size_t) {
    const ProductState e = unit_direction(model, o.seed, 0x7A9 + i);
    ProductState fd = cocycle_psi(model, path, 1.0, chi + kDelta * e);
    fd -= base;
    fd *= 1.0 / kDelta;
    const ProductState tan = propagate_tangent(model, path, chi, e, 1.0);
    rel[i] = h_distance(fd, tan) / h_norm(tan);
  });
  const double worst = *std::max_element(rel.begin(), rel.end());
  return {"tangent_fd", worst < 1e-4,
          "max relative error over 50 directions at delta = 1e-6: " + sci(worst)};
}

CheckResult check_differentiability_order(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  const ProductState chi = attractor_point(model, path, o.workers);
  const ProductState e = unit_direction(model, o.seed, 0xD1FF);
  const double scales[] = {1e-2, 1e-3, 1e-4, 1e-5};
  const auto rep = differentiability_check(model, path, chi, e, scales);
  const bool pass = std::isfinite(rep.slope) && std::abs(rep.slope - 2.0) <= 0.1;
  return {"differentiability_order", pass,
          "log-log slope " + fmt("%.4f", rep.slope) + " (alpha = " + fmt("%.4f", rep.alpha) +
              "), K_est = " + fmt("%.3g", rep.K_est)};
}

CheckResult check_absorption(const VerifyOptions& o) {
  const ExperimentConfig cfg = default_config();
  const Model model = model_from(cfg);
  constexpr std::size_t kPaths = 8;
  std::size_t violations = 0;
  std::size_t absorbed = 0;
  double worst_T = 0.0;
  double worst_ratio = 0.0;
  for (std::size_t p = 0; p < kPaths; ++p) {
    const NoisePath path = model.make_path(derive_seed(o.seed, 0xAB50 + p));
    AbsorbingOptions opt;
    opt.ensemble = 256;
    opt.horizon = cfg.horizon;
    opt.scan_time = cfg.scan_time;
    opt.init_seed = cfg.init_seed;
    opt.workers = o.workers;
    const auto est = absorbing_radius(model, path, opt);
    violations += est.violations;
    absorbed += est.absorbed ? 1 : 0;
    if (est.absorbed) worst_T = std::max(worst_T, est.T_absorb);
    worst_ratio = std::max(worst_ratio, est.radius_empirical / est.radius_analytic);
  }
  return {"absorption", violations == 0 && absorbed == kPaths,
          std::to_string(absorbed) + "/8 paths absorbed, " + std::to_string(violations) +
              " violations over 8 x 256 members, max T_absorb = " + fmt("%.4g", worst_T) +
              ", max empirical/analytic = " + fmt("%.3g", worst_ratio)};
}

CheckResult check_pullback_convergence(const VerifyOptions& o) {
  const ExperimentConfig cfg = default_config();
  const Model model = model_from(cfg);
  const NoisePath path = model.make_path(o.seed);
  AbsorbingOptions opt;
  opt.ensemble = cfg.ensemble;
  opt.workers = o.workers;
  const double ball = absorbing_radius(model, path, opt).radius_analytic;
  const auto clouds = pullback_evolve(model, path, cfg.pullback, cfg.ensemble, ball,
                                      cfg.init_seed, o.workers);
  double scale = 0.0;
  for (const auto& x : clouds.back().states) scale = std::max(scale, h_norm(x));
  // Gaps at or below roundoff count as converged.
  const double floor = 1e-14 * (1.0 + scale);
  std::vector<double> ladder;
  for (std::size_t i = 0; i + 1 < clouds.size(); ++i) {
    ladder.push_back(hausdorff_semidist(clouds[i].states, clouds[i + 1].states));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (ladder[i - 1] > floor && !(ladder[i] < ladder[i - 1])) decreasing = false;
    if (ladder[i - 1] <= floor && ladder[i] > floor) decreasing = false;
  }
  const bool small = ladder.back() < 1e-4;
  std::string detail = "ladder";
  for (double g : ladder) detail += " " + sci(g);
  detail += " (floor " + sci(floor) + ")";

  ExperimentConfig affine = cfg;
  affine.model.b = 0.0;
  const Model am = model_from(affine);
  const double T80[] = {80.0};
  const auto cloud = pullback_evolve(am, path, T80, cfg.ensemble, ball, cfg.init_seed, o.workers);
  const ProductState star = oracle::affine_stationary_point(am, path, 200.0);
  const double diam = cloud_diameter(cloud.front().states);
  double dist = 0.0;
  for (const auto& x : cloud.front().states) dist = std::max(dist, h_distance(x, star));
  detail += "; affine T = 80 diameter " + sci(diam) + ", distance to stationary point " + sci(dist);
  return {"pullback_convergence", decreasing && small && diam < 1e-8 && dist < 1e-8, detail};
}

CheckResult check_dimension_bounds(const VerifyOptions& o) {
  const ExperimentConfig cfg = default_config();
  const Model model = model_from(cfg);
  LyapunovOptions lo;
  lo.m = cfg.lyapunov_m;
  lo.intervals = cfg.lyapunov_intervals;
  lo.warmup = cfg.lyapunov_warmup;
  lo.paths = cfg.lyapunov_paths;
  lo.base_points = cfg.base_points;
  lo.pullback_time = cfg.lyapunov_pullback;
  lo.seed = o.seed;
  lo.workers = o.workers;
  const auto stats = estimate_q(model, lo);
  const auto rep = dimension_bounds(stats);
  const bool finite = rep.established && std::isfinite(rep.gamma_bound);

  const NoisePath path = model.make_path(o.seed);
  AbsorbingOptions opt;
  opt.workers = o.workers;
  const double ball = absorbing_radius(model, path, opt).radius_analytic;
  const double T[] = {cfg.pullback.back()};
  const auto cloud = pullback_evolve(model, path, T, cfg.ensemble, ball, cfg.init_seed, o.workers);
  const auto box = box_counting_dim(cloud.front(), cfg.box_k, {});
  const bool box_ok = finite && box.dimension <= rep.gamma_bound + 1e-12;

  const std::vector<std::vector<double>> q = {{0.5, -0.5}};
  const auto hand = dimension_bounds(q);
  const double gamma_hand = oracle::gamma_by_hand(q, 2);
  const bool hand_ok = hand.established && hand.d_H_bound == 2 && hand.gamma_bound == 3.0 &&
                       gamma_hand == 3.0;

  std::string detail = "d_H_bound = " + std::to_string(rep.d_H_bound) + ", gamma_bound = " +
                       fmt("%.6g", rep.gamma_bound) + ", box = " + fmt("%.4g", box.dimension) +
                       (box.degenerate ? " (degenerate cloud)" : "") + "; q = (0.5, -0.5) gives d = " +
                       std::to_string(hand.d_H_bound) + ", gamma = " + fmt("%.17g", hand.gamma_bound);
  if (!stats.converged) detail += "; q not converged between K/2 and K";
  return {"dimension_bounds", finite && box_ok && hand_ok, detail};
}

CheckResult check_trace_identity(const VerifyOptions& o) {
  ExperimentConfig cfg = default_config();
  cfg.model.a = 0.0;
  cfg.model.b = 0.0;
  cfg.shapes.clear();
  const Model model = model_from(cfg);
  const NoisePath path = model.make_path(o.seed);
  const auto tr = trace_average(model, path, model.zero_state(),
                                TangentFrame::random(model, 4, derive_seed(o.seed, 0x7ACE)), 200, 10);
  const double rel = std::abs(tr.trace_mean - tr.stretch_mean) / std::abs(tr.stretch_mean);
  return {"trace_identity", rel <= 0.05,
          "time-averaged trace " + fmt("%.5f", tr.trace_mean) + " vs log-stretch mean " +
              fmt("%.5f", tr.stretch_mean) + " (relative " + sci(rel) + ")"};
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& o) {
  using Check = CheckResult (*)(const VerifyOptions&);
  const Check checks[] = {check_cocycle_exactness,     check_ou_statistics,
                          check_linear_spectrum,       check_delayed_linear,
                          check_tangent_fd,            check_differentiability_order,
                          check_absorption,            check_pullback_convergence,
                          check_dimension_bounds,      check_trace_identity};
  const char* names[] = {"cocycle_exactness", "ou_statistics",  "linear_spectrum",
                         "delayed_linear",    "tangent_fd",     "differentiability_order",
                         "absorption",        "pullback_convergence", "dimension_bounds",
                         "trace_identity"};
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < std::size(checks); ++i) {
    try {
      out.push_back(checks[i](o));
    } catch (const std::exception& e) {
      out.push_back({names[i], false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

namespace {

CheckResult invariant_shift_composition(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  const double h = model.step();
  std::size_t ok = 0;
  for (std::int64_t i = 0; i < 100; ++i) {
    const double s = h * std::floor(-200.0 + 400.0 * keyed_uniform(o.seed, 0x5A1, i));
    const double t = h * std::floor(-200.0 + 400.0 * keyed_uniform(o.seed, 0x5A2, i));
    const NoisePath a = shift(shift(path, s), t);
    const NoisePath b = shift(path, s + t);
    bool same = a.origin() == b.origin();
    for (std::int64_t n = -5; n <= 5 && same; ++n) {
      same = a.wiener_increment(0, n) == b.wiener_increment(0, n);
    }
    ok += same ? 1 : 0;
  }
  return {"shift_composition", ok == 100,
          "theta_t theta_s = theta_{t+s} on " + std::to_string(ok) + "/100 pairs"};
}

CheckResult invariant_tempered_window(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  std::size_t bad = 0;
  for (std::uint64_t p = 0; p < 8; ++p) {
    const auto rep = tempered_radius(model.make_path(derive_seed(o.seed, 0x7E0 + p)),
                                     model.params().mu, model.params().tau, 20.0, model.burn());
    bad += rep.window_violations + rep.delay_violations;
  }
  return {"tempered_window_bound", bad == 0,
          std::to_string(bad) + " window or delay violations over 8 paths"};
}

CheckResult invariant_conjugation(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const ProductState chi = random_state(model, o.seed, 0xC0A + i, 1.0);
    const double t = 0.5 * static_cast<double>(i + 1);
    ProductState via_phi = cocycle_phi(model, path, t, chi - noise_lift_state(model, path, 0.0));
    via_phi += noise_lift_state(model, path, t);
    const ProductState direct = cocycle_psi(model, path, t, chi);
    worst = std::max(worst, h_distance(via_phi, direct) / (1.0 + h_norm(direct)));
  }
  return {"conjugation_identity", worst <= 1e-12,
          "max relative |Psi - (Phi(chi - Z) + Z)| = " + sci(worst)};
}

CheckResult invariant_lipschitz(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  const double L = std::max(0.0, model.rho_op()) + model.lipschitz_f() + std::abs(model.params().a);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ProductState x = random_state(model, o.seed, 0x11A + 2 * i, 1.0);
    const ProductState y = random_state(model, o.seed, 0x11B + 2 * i, 1.0);
    for (double t : {1.0, 5.0, 10.0}) {
      const double lhs = h_distance(cocycle_psi(model, path, t, x), cocycle_psi(model, path, t, y));
      worst = std::max(worst, lhs / (std::exp(L * t) * h_distance(x, y)));
    }
  }
  return {"lipschitz_initial_data", worst <= 1.0,
          "max ||Psi x - Psi y|| / (e^{Lt} ||x - y||) = " + fmt("%.4g", worst)};
}

CheckResult invariant_frame(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  ProductState base = attractor_point(model, path, o.workers);
  TangentFrame frame = TangentFrame::random(model, 6, o.seed);
  double worst = frame.gram_deviation();
  for (int k = 0; k < 5; ++k) {
    dpsi_unit(model, shift(path, static_cast<double>(k)), base, frame);
    worst = std::max(worst, frame.gram_deviation());
  }
  return {"frame_orthonormality", worst <= 1e-12, "max Gram deviation " + sci(worst)};
}

CheckResult invariant_workers(const VerifyOptions& o) {
  const Model model = model_from(default_config());
  const NoisePath path = model.make_path(o.seed);
  const double T[] = {10.0, 20.0};
  const auto one = pullback_evolve(model, path, T, 32, 5.0, 0x5eed, 1);
  const auto many = pullback_evolve(model, path, T, 32, 5.0, 0x5eed, 4);
  bool same = true;
  for (std::size_t i = 0; i < one.size(); ++i) same = same && one[i].states == many[i].states;
  return {"worker_independence", same, same ? "clouds bitwise equal for 1 and 4 workers"
                                            : "clouds differ between 1 and 4 workers"};
}

}  // namespace

std::vector<CheckResult> run_invariants(const VerifyOptions& o) {
  using Check = CheckResult (*)(const VerifyOptions&);
  const std::pair<const char*, Check> checks[] = {
      {"shift_composition", invariant_shift_composition},
      {"tempered_window_bound", invariant_tempered_window},
      {"conjugation_identity", invariant_conjugation},
      {"lipschitz_initial_data", invariant_lipschitz},
      {"frame_orthonormality", invariant_frame},
      {"worker_independence", invariant_workers},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    try {
      out.push_back(fn(o));
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

}  // namespace delaylab
