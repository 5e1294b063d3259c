// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration: an INI file with [model], [discretization],
// [noise], [run] and [output] sections. Unknown keys are rejected.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delaylab/dynamics.hpp"

namespace delaylab {

using ShapeSpec = std::vector<std::vector<std::pair<std::size_t, double>>>;

struct ExperimentConfig {
  ModelParams model;

  std::size_t n_modes = 8;
  std::size_t history_nodes = 32;  // M intervals, M + 1 nodes
  std::string op = "dirichlet_laplacian";
  std::vector<double> eigenvalues;  // op = "explicit"

  std::uint64_t seed = 1;
  ShapeSpec shapes = {{{1, 0.3}}, {{2, 0.1}}};
  std::optional<double> burn_in;  // default 40 / mu

  double t_final = 10.0;
  std::vector<double> pullback = {10.0, 20.0, 40.0, 80.0, 160.0};
  std::size_t ensemble = 256;
  double horizon = 20.0;
  double scan_time = 20.0;
  std::size_t lyapunov_m = 6;
  std::size_t lyapunov_intervals = 200;
  std::size_t lyapunov_paths = 32;
  std::size_t lyapunov_warmup = 10;
  std::size_t base_points = 32;
  double lyapunov_pullback = 40.0;
  std::size_t box_k = 3;
  std::size_t workers = 1;
  std::uint64_t init_seed = 0x5eed;

  std::string trajectory_out = "trajectory.csv";
  std::string cloud_out = "cloud.csv";
  std::string report_out = "attractor.json";
  std::string q_out = "q.csv";
  std::string dimension_out = "dim.json";

  double burn() const { return burn_in ? *burn_in : 40.0 / model.mu; }
};

/// "1:0.3 ; 2:0.1" -> two shapes; "1:0.3, 3:0.05" -> one shape on two modes.
ShapeSpec parse_shapes(const std::string& text);
std::string format_shapes(const ShapeSpec& shapes);

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// Applies DELAYLAB_SEED when set.
void apply_environment(ExperimentConfig& cfg);

/// Hypothesis checks; with `attractor` also the absorbing-set preconditions.
void validate(const ExperimentConfig& cfg, bool attractor);

Model build_model(const ExperimentConfig& cfg);

/// "section.key = value" lines in a fixed order.
std::vector<std::string> config_echo(const ExperimentConfig& cfg);

}  // namespace delaylab
