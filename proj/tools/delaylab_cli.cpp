// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library only through delaylab.h.
#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <string>

#include "delaylab/delaylab.h"

namespace {

struct Handle {
  dl_experiment* exp = nullptr;
  ~Handle() { dl_experiment_destroy(exp); }
};

struct Text {
  char* s = nullptr;
  ~Text() { dl_free_string(s); }
  std::string str() const { return s ? s : ""; }
};

// Exit codes: 0 success, 1 verification failure, 2 usage, 3 library error.
int report(dl_status st) {
  std::fprintf(stderr, "delaylab: %s: %s\n", dl_status_name(st), dl_last_error());
  return 3;
}

std::string output_or(const dl_experiment* exp, const std::string& flag, const char* which) {
  if (!flag.empty()) return flag;
  Text t;
  if (dl_output_path(exp, which, &t.s) != DL_OK) return {};
  return t.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delaylab: stochastic delayed reaction-diffusion lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dl_version()));

  std::string config_path;
  std::optional<std::size_t> workers;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
  app.add_option("--workers", workers, "Worker threads (0 = all cores); does not change results");
  app.add_option("--seed", seed, "Noise seed (overrides config and DELAYLAB_SEED)");

  auto* sim = app.add_subcommand("simulate", "Psi trajectory from the zero state");
  std::optional<double> t_final;
  std::string sim_out;
  sim->add_option("--t-final", t_final, "Final time (multiple of tau / history_nodes)");
  sim->add_option("--out", sim_out, "Trajectory CSV");

  auto* att = app.add_subcommand("attractor", "Pullback clouds, absorbing radius, semidistance ladder");
  std::string pullback, att_out, att_report;
  std::optional<std::size_t> ensemble;
  att->add_option("--pullback", pullback, "Comma-separated pullback times");
  att->add_option("--ensemble", ensemble, "Initial states per cloud");
  att->add_option("--out", att_out, "Cloud CSV for the largest pullback time");
  att->add_option("--report", att_report, "JSON report");

  auto* lya = app.add_subcommand("lyapunov", "q_j statistics over noise paths");
  std::size_t m = 0, intervals = 0, paths = 0;
  std::string lya_out;
  lya->add_option("--m", m, "Frame size");
  lya->add_option("--intervals", intervals, "Unit intervals K per run");
  lya->add_option("--paths", paths, "Noise paths");
  lya->add_option("--out", lya_out, "q CSV");

  auto* dim = app.add_subcommand("dimension", "Hausdorff and fractal dimension bounds");
  std::string dim_report;
  dim->add_option("--report", dim_report, "JSON report");
  dim->add_option("--m", m, "Frame size");
  dim->add_option("--intervals", intervals, "Unit intervals K per run");
  dim->add_option("--paths", paths, "Noise paths");

  auto* ver = app.add_subcommand("verify", "Acceptance criteria and invariant suite");
  bool acceptance_only = false;
  std::string ver_report;
  ver->add_flag("--acceptance-only", acceptance_only, "Skip the extra invariant rows");
  ver->add_option("--report", ver_report, "Also write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Handle h;
  dl_status st = config_path.empty() ? dl_experiment_create(&h.exp)
                                     : dl_experiment_from_file(config_path.c_str(), &h.exp);
  if (st != DL_OK) return report(st);
  if (seed) dl_set_seed(h.exp, *seed);
  if (workers) dl_set_workers(h.exp, *workers);

  Text json;
  if (*sim) {
    if (t_final && (st = dl_set_t_final(h.exp, *t_final)) != DL_OK) return report(st);
    const std::string out = output_or(h.exp, sim_out, "trajectory");
    if ((st = dl_run_simulate(h.exp, out.c_str(), &json.s)) != DL_OK) return report(st);
  } else if (*att) {
    if (!pullback.empty() && (st = dl_set_pullback(h.exp, pullback.c_str())) != DL_OK) return report(st);
    if (ensemble && (st = dl_set_ensemble(h.exp, *ensemble)) != DL_OK) return report(st);
    const std::string out = output_or(h.exp, att_out, "cloud");
    const std::string rep = output_or(h.exp, att_report, "report");
    if ((st = dl_run_attractor(h.exp, out.c_str(), rep.c_str(), &json.s)) != DL_OK) return report(st);
  } else if (*lya) {
    dl_set_lyapunov(h.exp, m, intervals, paths);
    const std::string out = output_or(h.exp, lya_out, "q");
    if ((st = dl_run_lyapunov(h.exp, out.c_str(), &json.s)) != DL_OK) return report(st);
  } else if (*dim) {
    dl_set_lyapunov(h.exp, m, intervals, paths);
    const std::string rep = output_or(h.exp, dim_report, "dimension");
    if ((st = dl_run_dimension(h.exp, rep.c_str(), &json.s)) != DL_OK) return report(st);
  } else if (*ver) {
    int ok = 0;
    if ((st = dl_run_verify(h.exp, acceptance_only ? 0 : 1, &ok, &json.s)) != DL_OK) return report(st);
    const auto table = nlohmann::json::parse(json.str());
    std::size_t width = 0;
    for (const auto& row : table["rows"]) width = std::max(width, row["name"].get<std::string>().size());
    for (const auto& row : table["rows"]) {
      const std::string name = row["name"];
      std::printf("%-4s  %-*s  %s\n", row["passed"].get<bool>() ? "PASS" : "FAIL",
                  static_cast<int>(width), name.c_str(), row["detail"].get<std::string>().c_str());
    }
    if (!ver_report.empty()) {
      std::FILE* f = std::fopen(ver_report.c_str(), "wb");
      if (!f) {
        std::perror(ver_report.c_str());
        return 3;
      }
      std::fprintf(f, "%s\n", json.s);
      std::fclose(f);
    }
    return ok ? 0 : 1;
  }
  std::printf("%s\n", json.s);
  return 0;
}
