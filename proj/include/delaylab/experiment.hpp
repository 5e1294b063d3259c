// SPDX-License-Identifier: Apache-2.0
//
// Subcommand drivers. Every output is a pure function of the configuration
// (worker count excluded), so reruns produce identical bytes.
#pragma once

#include <string>

#include "delaylab/config.hpp"
#include "delaylab/tangent.hpp"

namespace delaylab {

inline constexpr int kSchemaVersion = 1;

/// Psi trajectory from the zero state over [0, t_final]; CSV columns
/// t, head_1..head_N, h_norm. Returns a JSON summary.
std::string run_simulate(const ExperimentConfig& cfg, const std::string& out_path);

/// Absorbing estimate, pullback clouds and semidistance ladder. Writes the
/// largest-T cloud as CSV (member, head_1..head_N, h_norm) and, when
/// `report_path` is nonempty, a JSON report. Returns the report text.
std::string run_attractor(const ExperimentConfig& cfg, const std::string& cloud_path,
                          const std::string& report_path);

/// q_j table; CSV columns path_id, j, q. Returns a JSON summary.
std::string run_lyapunov(const ExperimentConfig& cfg, const std::string& out_path);

/// q table, d_H and gamma bounds and the box-counting cross-check as JSON.
std::string run_dimension(const ExperimentConfig& cfg, const std::string& report_path);

}  // namespace delaylab
