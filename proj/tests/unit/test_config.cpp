// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdlib>

#include "delaylab/config.hpp"
#include "delaylab/errors.hpp"

using namespace delaylab;

TEST(Config, DefaultsFromEmptyText) {
  const auto c = parse_config("");
  EXPECT_EQ(c.n_modes, 8u);
  EXPECT_EQ(c.history_nodes, 32u);
  EXPECT_EQ(c.model.a, 0.25);
  EXPECT_EQ(c.burn(), 40.0);
  EXPECT_EQ(c.pullback.size(), 5u);
}

TEST(Config, ParsesAllSections) {
  const auto c = parse_config(R"(
[model]
mu = 2
a = -0.5
b = 0.1
tau = 0.5
[discretization]
n_modes = 4
history_nodes = 16
[noise]
seed = 99
m = 1
step = 0.03125
shapes = 1:0.2, 3:0.05
burn_in = 12
[run]
pullback = 5, 10
ensemble = 7
[output]
cloud = c.csv
)");
  EXPECT_EQ(c.model.mu, 2.0);
  EXPECT_EQ(c.model.tau, 0.5);
  EXPECT_EQ(c.n_modes, 4u);
  EXPECT_EQ(c.seed, 99u);
  ASSERT_EQ(c.shapes.size(), 1u);
  EXPECT_EQ(c.shapes[0].size(), 2u);
  EXPECT_EQ(c.burn(), 12.0);
  EXPECT_EQ(c.pullback, (std::vector<double>{5.0, 10.0}));
  EXPECT_EQ(c.cloud_out, "c.csv");
  EXPECT_NO_THROW(build_model(c));
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config("[model]\nmuu = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[extra]\nx = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[model]\nmu = abc\n"), ConfigError);
  EXPECT_THROW(parse_config("[run]\nensemble = -3\n"), ConfigError);
  EXPECT_THROW(parse_config("[noise]\nm = 3\n"), ConfigError);
  EXPECT_THROW(parse_config("[noise]\nstep = 0.1\n"), ConfigError);
  EXPECT_THROW(parse_shapes("1-0.3"), ConfigError);
  EXPECT_THROW(parse_shapes("0:0.3"), ConfigError);
}

TEST(Config, HypothesisMessageNamesInequality) {
  auto c = parse_config("[model]\na = 2\nmu = 1\n");
  try {
    validate(c, false);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("||L|| <= mu"), std::string::npos);
  }
  c = parse_config("[model]\nb = 3\n");
  EXPECT_NO_THROW(validate(c, false));
  EXPECT_THROW(validate(c, true), ConfigError);
  c = parse_config("[run]\npullback = 10.01\n");
  EXPECT_THROW(validate(c, true), AlignmentError);
}

TEST(Config, ShapesRoundTrip) {
  const auto s = parse_shapes("1:0.3 ; 2:0.1, 4:-0.25");
  EXPECT_EQ(parse_shapes(format_shapes(s)), s);
  EXPECT_TRUE(parse_shapes("  ").empty());
}

TEST(Config, EchoIsStableAndComplete) {
  const auto c = parse_config("");
  const auto a = config_echo(c);
  EXPECT_EQ(a, config_echo(parse_config("")));
  EXPECT_EQ(a.front(), "model.mu = 1");
  auto c2 = c;
  c2.workers = 12;
  EXPECT_EQ(config_echo(c2), a);
  c2.seed = 3;
  EXPECT_NE(config_echo(c2), a);
}

TEST(Config, EnvironmentSeed) {
  auto c = parse_config("");
  ::setenv("DELAYLAB_SEED", "1234", 1);
  apply_environment(c);
  ::unsetenv("DELAYLAB_SEED");
  EXPECT_EQ(c.seed, 1234u);
  ::setenv("DELAYLAB_SEED", "x", 1);
  EXPECT_THROW(apply_environment(c), ConfigError);
  ::unsetenv("DELAYLAB_SEED");
}

TEST(Config, MissingFile) { EXPECT_THROW(load_config("/nonexistent/delaylab.ini"), IoError); }
