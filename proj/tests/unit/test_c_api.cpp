// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "delaylab/delaylab.h"

namespace fs = std::filesystem;

TEST(CApi, LifecycleAndEcho) {
  dl_experiment* e = nullptr;
  ASSERT_EQ(dl_experiment_create(&e), DL_OK);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(dl_set_seed(e, 17), DL_OK);
  char* echo = nullptr;
  ASSERT_EQ(dl_config_echo(e, &echo), DL_OK);
  EXPECT_NE(std::string(echo).find("noise.seed = 17\n"), std::string::npos);
  dl_free_string(echo);
  char* path = nullptr;
  ASSERT_EQ(dl_output_path(e, "cloud", &path), DL_OK);
  EXPECT_STREQ(path, "cloud.csv");
  dl_free_string(path);
  EXPECT_EQ(dl_output_path(e, "bogus", &path), DL_ERR_INVALID_ARGUMENT);
  dl_experiment_destroy(e);
  dl_experiment_destroy(nullptr);
}

TEST(CApi, ErrorCodesAndMessages) {
  dl_experiment* e = nullptr;
  EXPECT_EQ(dl_experiment_from_string("[model]\na = 2\n", &e), DL_OK);
  const auto out = (fs::temp_directory_path() / "delaylab_capi_sim.csv").string();
  EXPECT_EQ(dl_run_simulate(e, out.c_str(), nullptr), DL_ERR_CONFIG);
  EXPECT_NE(std::string(dl_last_error()).find("||L|| <= mu"), std::string::npos);
  dl_experiment_destroy(e);

  EXPECT_EQ(dl_experiment_from_string("[nope]\n", &e), DL_ERR_CONFIG);
  EXPECT_EQ(e, nullptr);
  EXPECT_EQ(dl_experiment_from_file("/nonexistent.ini", &e), DL_ERR_IO);
  EXPECT_EQ(dl_experiment_create(nullptr), DL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(dl_set_seed(nullptr, 1), DL_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(dl_status_name(DL_ERR_ALIGNMENT), "alignment_error");
}

TEST(CApi, SimulateWritesFile) {
  dl_experiment* e = nullptr;
  ASSERT_EQ(dl_experiment_create(&e), DL_OK);
  ASSERT_EQ(dl_set_t_final(e, 1.0), DL_OK);
  EXPECT_EQ(dl_set_t_final(e, -1.0), DL_ERR_CONFIG);
  EXPECT_EQ(dl_set_pullback(e, "1,x"), DL_ERR_CONFIG);
  EXPECT_EQ(dl_set_ensemble(e, 0), DL_ERR_CONFIG);
  const auto out = (fs::temp_directory_path() / "delaylab_capi_ok.csv").string();
  char* json = nullptr;
  ASSERT_EQ(dl_run_simulate(e, out.c_str(), &json), DL_OK) << dl_last_error();
  EXPECT_NE(std::string(json).find("\"rows\": 33"), std::string::npos);
  dl_free_string(json);
  EXPECT_TRUE(fs::exists(out));
  EXPECT_STREQ(dl_last_error(), "");
  dl_experiment_destroy(e);
}
