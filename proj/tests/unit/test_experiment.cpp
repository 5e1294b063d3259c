// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "delaylab/errors.hpp"
#include "delaylab/experiment.hpp"

using namespace delaylab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "delaylab_test_experiment";
  fs::create_directories(dir);
  return dir / name;
}

ExperimentConfig small() {
  ExperimentConfig c;
  c.t_final = 2.0;
  c.pullback = {5.0, 10.0};
  c.ensemble = 12;
  c.lyapunov_m = 3;
  c.lyapunov_intervals = 50;
  c.lyapunov_paths = 2;
  c.base_points = 3;
  return c;
}

}  // namespace

TEST(Experiment, SimulateIsByteIdentical) {
  const auto c = small();
  run_simulate(c, scratch("a.csv").string());
  run_simulate(c, scratch("b.csv").string());
  const auto a = slurp(scratch("a.csv"));
  EXPECT_EQ(a, slurp(scratch("b.csv")));
  EXPECT_EQ(a.rfind("# delaylab simulate\n# schema_version = 1\n", 0), 0u);
  EXPECT_NE(a.find("\nt,head_1,head_2,head_3,head_4,head_5,head_6,head_7,head_8,h_norm\n"), std::string::npos);
  // Header + echo lines + column row + 65 data rows.
  std::size_t data = 0;
  std::istringstream in(a);
  for (std::string line; std::getline(in, line);) data += (!line.empty() && line[0] != '#' && line[0] != 't');
  EXPECT_EQ(data, 65u);
}

TEST(Experiment, AttractorIndependentOfWorkers) {
  auto c = small();
  c.workers = 1;
  const auto r1 = run_attractor(c, scratch("c1.csv").string(), scratch("r1.json").string());
  c.workers = 3;
  const auto r3 = run_attractor(c, scratch("c3.csv").string(), scratch("r3.json").string());
  EXPECT_EQ(r1, r3);
  EXPECT_EQ(slurp(scratch("c1.csv")), slurp(scratch("c3.csv")));
  const auto j = nlohmann::json::parse(r1);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["ladder"].size(), 1u);
  EXPECT_TRUE(j["absorbing"]["absorbed"].get<bool>());
}

TEST(Experiment, LyapunovAndDimension) {
  const auto c = small();
  run_lyapunov(c, scratch("q.csv").string());
  const auto q = slurp(scratch("q.csv"));
  EXPECT_NE(q.find("\npath_id,j,q\n0,1,"), std::string::npos);
  const auto j = nlohmann::json::parse(run_dimension(c, scratch("dim.json").string()));
  for (const char* key : {"q", "d_H_bound", "gamma_bound", "box_estimate", "diagnostics"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["q"].size(), 3u);
}

TEST(Experiment, ValidationBeforeRun) {
  auto c = small();
  c.model.b = 3.0;
  EXPECT_THROW(run_attractor(c, "", ""), ConfigError);
  EXPECT_NO_THROW(run_simulate(c, scratch("ok.csv").string()));
  EXPECT_THROW(run_simulate(small(), "/nonexistent/dir/x.csv"), IoError);
}
