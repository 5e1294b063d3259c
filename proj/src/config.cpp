// SPDX-License-Identifier: Apache-2.0
#include "delaylab/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "delaylab/errors.hpp"

namespace delaylab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": '" + v + "' is not a finite number");
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument(v);
    const unsigned long long x = std::stoull(v, &used, 0);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": '" + v + "' is not a nonnegative integer");
  }
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v, ',')) {
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s;
}

}  // namespace

ShapeSpec parse_shapes(const std::string& text) {
  ShapeSpec out;
  if (trim(text).empty()) return out;
  for (const auto& entry : split(text, ';')) {
    if (entry.empty()) throw ConfigError("noise.shapes: empty shape entry in '" + text + "'");
    std::vector<std::pair<std::size_t, double>> g;
    for (const auto& pair : split(entry, ',')) {
      const auto colon = pair.find(':');
      if (colon == std::string::npos) {
        throw ConfigError("noise.shapes: expected mode:amplitude, got '" + pair + "'");
      }
      const auto mode = to_u64("noise.shapes", trim(pair.substr(0, colon)));
      if (mode == 0) throw ConfigError("noise.shapes: modes are 1-based");
      g.emplace_back(static_cast<std::size_t>(mode),
                     to_double("noise.shapes", trim(pair.substr(colon + 1))));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string format_shapes(const ShapeSpec& shapes) {
  std::string s;
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    if (j) s += " ; ";
    for (std::size_t i = 0; i < shapes[j].size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(shapes[j][i].first) + ":" + num(shapes[j][i].second);
    }
  }
  return s;
}

ExperimentConfig parse_config(const std::string& text) {
  namespace pt = boost::property_tree;
  static const std::set<std::string> sections = {"model", "discretization", "noise", "run",
                                                 "output"};
  {
    // The INI reader drops sections without keys; check headers directly.
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      line = trim(line);
      if (line.size() >= 2 && line.front() == '[' && line.back() == ']') {
        const std::string name = trim(line.substr(1, line.size() - 2));
        if (!sections.count(name)) throw ConfigError("unknown config section [" + name + "]");
      }
    }
  }
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }

  ExperimentConfig c;
  std::optional<std::size_t> m_declared;
  std::optional<double> step_declared;
  for (const auto& [section, body] : tree) {
    if (!sections.count(section)) throw ConfigError("unknown config section [" + section + "]");
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("config key '" + section + "' must live inside a section");
    }
    for (const auto& [key, node] : body) {
      const std::string name = section + "." + key;
      const std::string v = trim(node.data());
      auto sz = [&] { return static_cast<std::size_t>(to_u64(name, v)); };
      if (name == "model.mu") c.model.mu = to_double(name, v);
      else if (name == "model.a") c.model.a = to_double(name, v);
      else if (name == "model.b") c.model.b = to_double(name, v);
      else if (name == "model.tau") c.model.tau = to_double(name, v);
      else if (name == "discretization.n_modes") c.n_modes = sz();
      else if (name == "discretization.history_nodes") c.history_nodes = sz();
      else if (name == "discretization.operator") c.op = v;
      else if (name == "discretization.eigenvalues") c.eigenvalues = to_list(name, v);
      else if (name == "noise.seed") c.seed = to_u64(name, v);
      else if (name == "noise.m") m_declared = sz();
      else if (name == "noise.step") step_declared = to_double(name, v);
      else if (name == "noise.burn_in") c.burn_in = to_double(name, v);
      else if (name == "noise.shapes") c.shapes = parse_shapes(v);
      else if (name == "run.t_final") c.t_final = to_double(name, v);
      else if (name == "run.pullback") c.pullback = to_list(name, v);
      else if (name == "run.ensemble") c.ensemble = sz();
      else if (name == "run.horizon") c.horizon = to_double(name, v);
      else if (name == "run.scan_time") c.scan_time = to_double(name, v);
      else if (name == "run.lyapunov_m") c.lyapunov_m = sz();
      else if (name == "run.lyapunov_intervals") c.lyapunov_intervals = sz();
      else if (name == "run.lyapunov_paths") c.lyapunov_paths = sz();
      else if (name == "run.lyapunov_warmup") c.lyapunov_warmup = sz();
      else if (name == "run.base_points") c.base_points = sz();
      else if (name == "run.lyapunov_pullback") c.lyapunov_pullback = to_double(name, v);
      else if (name == "run.box_k") c.box_k = sz();
      else if (name == "run.workers") c.workers = sz();
      else if (name == "run.init_seed") c.init_seed = to_u64(name, v);
      else if (name == "output.trajectory") c.trajectory_out = v;
      else if (name == "output.cloud") c.cloud_out = v;
      else if (name == "output.report") c.report_out = v;
      else if (name == "output.q") c.q_out = v;
      else if (name == "output.dimension") c.dimension_out = v;
      else throw ConfigError("unknown config key " + name);
    }
  }
  if (m_declared && *m_declared != c.shapes.size()) {
    throw ConfigError("noise.m = " + std::to_string(*m_declared) + " but noise.shapes lists " +
                      std::to_string(c.shapes.size()) + " shapes");
  }
  if (step_declared && c.history_nodes > 0) {
    const double h = c.model.tau / static_cast<double>(c.history_nodes);
    if (std::abs(*step_declared - h) > 1e-12 * h) {
      throw ConfigError("noise.step = " + num(*step_declared) +
                        " must equal tau / history_nodes = " + num(h));
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_environment(ExperimentConfig& cfg) {
  if (const char* s = std::getenv("DELAYLAB_SEED"); s && *s) cfg.seed = to_u64("DELAYLAB_SEED", s);
}

Model build_model(const ExperimentConfig& c) {
  if (c.n_modes == 0) throw ConfigError("discretization.n_modes must be at least 1");
  if (c.history_nodes < 2) throw ConfigError("discretization.history_nodes must be at least 2");
  if (!(c.model.tau > 0.0)) throw ConfigError("model.tau must be positive");
  SpectralDomain dom = [&] {
    if (c.op == "dirichlet_laplacian") return SpectralDomain::dirichlet_laplacian(c.n_modes);
    if (c.op == "explicit") {
      if (c.eigenvalues.size() != c.n_modes) {
        throw ConfigError("discretization.eigenvalues lists " + std::to_string(c.eigenvalues.size()) +
                          " values, n_modes = " + std::to_string(c.n_modes));
      }
      return SpectralDomain::with_eigenvalues(c.eigenvalues);
    }
    throw ConfigError("discretization.operator must be dirichlet_laplacian or explicit, got '" +
                      c.op + "'");
  }();
  if (c.burn() < 0.0) throw ConfigError("noise.burn_in must be nonnegative");
  NoiseShape shapes = NoiseShape::from_modes(dom, c.shapes);
  Model model(c.model, std::move(dom), std::move(shapes), c.history_nodes, c.burn());
  model.validate_hypotheses();
  return model;
}

void validate(const ExperimentConfig& cfg, bool attractor) {
  const Model model = build_model(cfg);
  if (attractor) model.validate_attractor_preconditions();
  const double h = model.step();
  for (double T : cfg.pullback) {
    if (!(T > 0.0)) throw ConfigError("run.pullback times must be positive");
    aligned_steps(T, h);
  }
  aligned_steps(cfg.t_final, h);
  model.steps_per_unit();
  if (cfg.ensemble == 0) throw ConfigError("run.ensemble must be at least 1");
}

std::vector<std::string> config_echo(const ExperimentConfig& c) {
  return {
      "model.mu = " + num(c.model.mu),
      "model.a = " + num(c.model.a),
      "model.b = " + num(c.model.b),
      "model.tau = " + num(c.model.tau),
      "discretization.n_modes = " + std::to_string(c.n_modes),
      "discretization.history_nodes = " + std::to_string(c.history_nodes),
      "discretization.operator = " + c.op,
      "discretization.eigenvalues = " + join(c.eigenvalues),
      "noise.seed = " + std::to_string(c.seed),
      "noise.m = " + std::to_string(c.shapes.size()),
      "noise.step = " + num(c.model.tau / static_cast<double>(c.history_nodes)),
      "noise.burn_in = " + num(c.burn()),
      "noise.shapes = " + format_shapes(c.shapes),
      "run.t_final = " + num(c.t_final),
      "run.pullback = " + join(c.pullback),
      "run.ensemble = " + std::to_string(c.ensemble),
      "run.horizon = " + num(c.horizon),
      "run.scan_time = " + num(c.scan_time),
      "run.lyapunov_m = " + std::to_string(c.lyapunov_m),
      "run.lyapunov_intervals = " + std::to_string(c.lyapunov_intervals),
      "run.lyapunov_paths = " + std::to_string(c.lyapunov_paths),
      "run.lyapunov_warmup = " + std::to_string(c.lyapunov_warmup),
      "run.base_points = " + std::to_string(c.base_points),
      "run.lyapunov_pullback = " + num(c.lyapunov_pullback),
      "run.box_k = " + std::to_string(c.box_k),
      "run.init_seed = " + std::to_string(c.init_seed),
  };
}

}  // namespace delaylab
