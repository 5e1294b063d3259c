// SPDX-License-Identifier: Apache-2.0
#include "delaylab/experiment.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "delaylab/errors.hpp"

namespace delaylab {

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "': " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "': " + std::strerror(errno));
}

std::string csv_header(const ExperimentConfig& cfg, const std::string& command) {
  std::string s = "# delaylab " + command + "\n# schema_version = " +
                  std::to_string(kSchemaVersion) + "\n";
  for (const auto& line : config_echo(cfg)) s += "# " + line + "\n";
  return s;
}

json config_json(const ExperimentConfig& cfg) {
  json j = json::array();
  for (const auto& line : config_echo(cfg)) j.push_back(line);
  return j;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string head_columns(std::size_t n) {
  std::string s;
  for (std::size_t k = 1; k <= n; ++k) s += ",head_" + std::to_string(k);
  return s;
}

struct AttractorRun {
  AbsorbingEstimate est;
  std::vector<AttractorSample> clouds;
};

AttractorRun attractor_run(const ExperimentConfig& cfg, const Model& model) {
  AttractorRun run;
  const NoisePath path = model.make_path(cfg.seed);
  AbsorbingOptions opt;
  opt.ensemble = cfg.ensemble;
  opt.horizon = cfg.horizon;
  opt.scan_time = cfg.scan_time;
  opt.init_seed = cfg.init_seed;
  opt.workers = cfg.workers;
  run.est = absorbing_radius(model, path, opt);
  run.clouds = pullback_evolve(model, path, cfg.pullback, cfg.ensemble, run.est.radius_analytic,
                               cfg.init_seed, cfg.workers);
  return run;
}

LyapunovOptions lyapunov_options(const ExperimentConfig& cfg) {
  LyapunovOptions o;
  o.m = cfg.lyapunov_m;
  o.intervals = cfg.lyapunov_intervals;
  o.warmup = cfg.lyapunov_warmup;
  o.paths = cfg.lyapunov_paths;
  o.base_points = cfg.base_points;
  o.pullback_time = cfg.lyapunov_pullback;
  o.init_seed = cfg.init_seed;
  o.seed = cfg.seed;
  o.workers = cfg.workers;
  return o;
}

json stats_json(const LyapunovStats& st) {
  json q = json::array();
  for (std::size_t j = 0; j < st.m; ++j) {
    q.push_back({{"j", j + 1},
                 {"q_mean", st.q_mean[j]},
                 {"q_se", st.q_se[j]},
                 {"q_half_mean", st.q_half_mean[j]}});
  }
  return {{"q", q},
          {"K", st.K},
          {"warmup", st.warmup},
          {"paths", st.n_paths},
          {"converged", st.converged},
          {"base_points_sampled", st.base_points_sampled},
          {"base_points_unique", st.base_points_unique},
          {"base_q_spread", st.base_q_spread},
          {"cloud_gap", st.cloud_gap},
          {"reseeded", st.reseeded}};
}

}  // namespace

std::string run_simulate(const ExperimentConfig& cfg, const std::string& out_path) {
  validate(cfg, false);
  const Model model = build_model(cfg);
  const NoisePath path = model.make_path(cfg.seed);
  const Trajectory traj = integrate_psi(model, path, cfg.t_final, model.zero_state());
  std::string text = csv_header(cfg, "simulate") + "t" + head_columns(model.n_modes()) + ",h_norm\n";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const auto& u = traj.states[i];
    text += num(static_cast<double>(i) * model.step());
    for (double x : u.head()) text += "," + num(x);
    text += "," + num(h_norm(u)) + "\n";
  }
  write_file(out_path, text);
  json j = {{"schema_version", kSchemaVersion},
            {"command", "simulate"},
            {"rows", traj.states.size()},
            {"final_h_norm", h_norm(traj.states.back())},
            {"out", out_path}};
  return j.dump(2);
}

std::string run_attractor(const ExperimentConfig& cfg, const std::string& cloud_path,
                          const std::string& report_path) {
  validate(cfg, true);
  if (cfg.pullback.empty()) throw ConfigError("run.pullback must list at least one time");
  const Model model = build_model(cfg);
  const AttractorRun run = attractor_run(cfg, model);
  const auto& last = run.clouds.back();

  std::string text = csv_header(cfg, "attractor") + "member" + head_columns(model.n_modes()) + ",h_norm\n";
  for (std::size_t i = 0; i < last.states.size(); ++i) {
    text += std::to_string(i);
    for (double x : last.states[i].head()) text += "," + num(x);
    text += "," + num(h_norm(last.states[i])) + "\n";
  }
  if (!cloud_path.empty()) write_file(cloud_path, text);

  json ladder = json::array();
  for (std::size_t i = 0; i + 1 < run.clouds.size(); ++i) {
    ladder.push_back({{"T", run.clouds[i].pullback_time},
                      {"T_next", run.clouds[i + 1].pullback_time},
                      {"semidist", hausdorff_semidist(run.clouds[i].states, run.clouds[i + 1].states)}});
  }
  json diam = json::array();
  for (const auto& c : run.clouds) {
    diam.push_back({{"T", c.pullback_time}, {"diameter", cloud_diameter(c.states)}});
  }
  const auto box = box_counting_dim(last, std::min(cfg.box_k, last.states.front().size()), {});
  const auto& e = run.est;
  json report = {
      {"schema_version", kSchemaVersion},
      {"command", "attractor"},
      {"config", config_json(cfg)},
      {"absorbing",
       {{"c", e.c},
        {"r_hat", e.r_hat},
        {"growth_rate", e.growth_rate},
        {"ball_radius", e.ball_radius},
        {"varpi", e.varpi},
        {"radius_limit", e.radius_limit},
        {"c1", e.c1},
        {"radius_analytic", e.radius_analytic},
        {"radius_empirical", e.radius_empirical},
        {"T_absorb", finite_or_null(e.T_absorb)},
        {"absorbed", e.absorbed},
        {"violations", e.violations}}},
      {"ladder", ladder},
      {"diameters", diam},
      {"box_counting", {{"k", cfg.box_k}, {"dimension", box.dimension}, {"degenerate", box.degenerate}}},
  };
  const std::string out = report.dump(2);
  if (!report_path.empty()) write_file(report_path, out + "\n");
  return out;
}

std::string run_lyapunov(const ExperimentConfig& cfg, const std::string& out_path) {
  validate(cfg, true);
  const Model model = build_model(cfg);
  const LyapunovStats st = estimate_q(model, lyapunov_options(cfg));
  std::string text = csv_header(cfg, "lyapunov") + "path_id,j,q\n";
  for (std::size_t p = 0; p < st.n_paths; ++p) {
    for (std::size_t j = 0; j < st.m; ++j) {
      text += std::to_string(p) + "," + std::to_string(j + 1) + "," + num(st.per_path_q[p][j]) + "\n";
    }
  }
  if (!out_path.empty()) write_file(out_path, text);
  json j = stats_json(st);
  j["schema_version"] = kSchemaVersion;
  j["command"] = "lyapunov";
  return j.dump(2);
}

std::string run_dimension(const ExperimentConfig& cfg, const std::string& report_path) {
  validate(cfg, true);
  if (cfg.pullback.empty()) throw ConfigError("run.pullback must list at least one time");
  const Model model = build_model(cfg);
  const LyapunovStats st = estimate_q(model, lyapunov_options(cfg));
  DimensionReport rep = dimension_bounds(st);
  const AttractorRun run = attractor_run(cfg, model);
  const auto& cloud = run.clouds.back();
  const auto box = box_counting_dim(cloud, std::min(cfg.box_k, cloud.states.front().size()), {});
  rep.box_estimate = box.dimension;
  rep.box_degenerate = box.degenerate;

  json report = {
      {"schema_version", kSchemaVersion},
      {"command", "dimension"},
      {"config", config_json(cfg)},
      {"q", stats_json(st)["q"]},
      {"d_H_bound", rep.established ? json(rep.d_H_bound) : json(nullptr)},
      {"gamma_bound", finite_or_null(rep.gamma_bound)},
      {"box_estimate", rep.box_estimate},
      {"diagnostics",
       {{"established", rep.established},
        {"message", rep.message},
        {"box_degenerate", rep.box_degenerate},
        {"box_k", cfg.box_k},
        {"cloud_pullback_time", cloud.pullback_time},
        {"cloud_diameter", cloud_diameter(cloud.states)},
        {"lyapunov", stats_json(st)}}},
  };
  const std::string out = report.dump(2);
  if (!report_path.empty()) write_file(report_path, out + "\n");
  return out;
}

}  // namespace delaylab
