// SPDX-License-Identifier: Apache-2.0
#include "delaylab/delaylab.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "delaylab/config.hpp"
#include "delaylab/errors.hpp"
#include "delaylab/experiment.hpp"
#include "delaylab/verification.hpp"

struct dl_experiment {
  delaylab::ExperimentConfig cfg;
};

namespace {

thread_local std::string last_error;

dl_status fail(dl_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
dl_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return DL_OK;
  } catch (const delaylab::Error& e) {
    return fail(static_cast<dl_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DL_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string str_or_empty(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* dl_version(void) { return "0.1.0"; }

const char* dl_status_name(dl_status s) {
  switch (s) {
    case DL_OK: return "ok";
    case DL_ERR_INDEX: return "index_error";
    case DL_ERR_DOMAIN: return "domain_error";
    case DL_ERR_DIMENSION: return "dimension_error";
    case DL_ERR_ALIGNMENT: return "alignment_error";
    case DL_ERR_CONFIG: return "config_error";
    case DL_ERR_INSUFFICIENT_WINDOW: return "insufficient_window";
    case DL_ERR_NUMERIC: return "numeric_error";
    case DL_ERR_IO: return "io_error";
    case DL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DL_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* dl_last_error(void) { return last_error.c_str(); }

void dl_free_string(char* s) { std::free(s); }

dl_status dl_experiment_create(dl_experiment** out) {
  if (!out) return fail(DL_ERR_INVALID_ARGUMENT, "dl_experiment_create: out is NULL");
  *out = nullptr;
  return guarded([&] {
    auto* e = new dl_experiment{};
    delaylab::apply_environment(e->cfg);
    *out = e;
  });
}

dl_status dl_experiment_from_file(const char* path, dl_experiment** out) {
  if (!out || !path) return fail(DL_ERR_INVALID_ARGUMENT, "dl_experiment_from_file: NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto cfg = delaylab::load_config(path);
    delaylab::apply_environment(cfg);
    *out = new dl_experiment{std::move(cfg)};
  });
}

dl_status dl_experiment_from_string(const char* text, dl_experiment** out) {
  if (!out || !text) return fail(DL_ERR_INVALID_ARGUMENT, "dl_experiment_from_string: NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto cfg = delaylab::parse_config(text);
    delaylab::apply_environment(cfg);
    *out = new dl_experiment{std::move(cfg)};
  });
}

void dl_experiment_destroy(dl_experiment* exp) { delete exp; }

#define DL_REQUIRE(exp)                                                   \
  do {                                                                    \
    if (!(exp)) return fail(DL_ERR_INVALID_ARGUMENT, "NULL experiment"); \
  } while (0)

dl_status dl_set_seed(dl_experiment* exp, uint64_t seed) {
  DL_REQUIRE(exp);
  exp->cfg.seed = seed;
  return DL_OK;
}

dl_status dl_set_workers(dl_experiment* exp, size_t workers) {
  DL_REQUIRE(exp);
  exp->cfg.workers = workers;
  return DL_OK;
}

dl_status dl_set_t_final(dl_experiment* exp, double t_final) {
  DL_REQUIRE(exp);
  if (!(t_final >= 0.0)) return fail(DL_ERR_CONFIG, "t_final must be nonnegative");
  exp->cfg.t_final = t_final;
  return DL_OK;
}

dl_status dl_set_ensemble(dl_experiment* exp, size_t ensemble) {
  DL_REQUIRE(exp);
  if (ensemble == 0) return fail(DL_ERR_CONFIG, "ensemble must be at least 1");
  exp->cfg.ensemble = ensemble;
  return DL_OK;
}

dl_status dl_set_pullback(dl_experiment* exp, const char* times) {
  DL_REQUIRE(exp);
  if (!times) return fail(DL_ERR_INVALID_ARGUMENT, "NULL pullback list");
  return guarded([&] {
    auto parsed = delaylab::parse_config(std::string("[run]\npullback = ") + times + "\n");
    if (parsed.pullback.empty()) throw delaylab::ConfigError("pullback list is empty");
    exp->cfg.pullback = parsed.pullback;
  });
}

dl_status dl_set_lyapunov(dl_experiment* exp, size_t m, size_t intervals, size_t paths) {
  DL_REQUIRE(exp);
  if (m) exp->cfg.lyapunov_m = m;
  if (intervals) exp->cfg.lyapunov_intervals = intervals;
  if (paths) exp->cfg.lyapunov_paths = paths;
  return DL_OK;
}

dl_status dl_config_echo(const dl_experiment* exp, char** text) {
  DL_REQUIRE(exp);
  if (!text) return fail(DL_ERR_INVALID_ARGUMENT, "NULL output");
  return guarded([&] {
    std::string s;
    for (const auto& line : delaylab::config_echo(exp->cfg)) s += line + "\n";
    *text = dup(s);
  });
}

dl_status dl_output_path(const dl_experiment* exp, const char* which, char** path) {
  DL_REQUIRE(exp);
  if (!which || !path) return fail(DL_ERR_INVALID_ARGUMENT, "NULL argument");
  const std::string w = which;
  const auto& c = exp->cfg;
  const std::string* p = w == "trajectory" ? &c.trajectory_out
                         : w == "cloud"    ? &c.cloud_out
                         : w == "report"   ? &c.report_out
                         : w == "q"        ? &c.q_out
                         : w == "dimension" ? &c.dimension_out
                                            : nullptr;
  if (!p) return fail(DL_ERR_INVALID_ARGUMENT, "unknown output '" + w + "'");
  return guarded([&] { *path = dup(*p); });
}

dl_status dl_run_simulate(const dl_experiment* exp, const char* out_csv, char** json) {
  DL_REQUIRE(exp);
  if (!out_csv || !*out_csv) return fail(DL_ERR_INVALID_ARGUMENT, "simulate needs an output path");
  return guarded([&] {
    const std::string s = delaylab::run_simulate(exp->cfg, out_csv);
    if (json) *json = dup(s);
  });
}

dl_status dl_run_attractor(const dl_experiment* exp, const char* cloud_csv, const char* report,
                           char** json) {
  DL_REQUIRE(exp);
  return guarded([&] {
    const std::string s =
        delaylab::run_attractor(exp->cfg, str_or_empty(cloud_csv), str_or_empty(report));
    if (json) *json = dup(s);
  });
}

dl_status dl_run_lyapunov(const dl_experiment* exp, const char* out_csv, char** json) {
  DL_REQUIRE(exp);
  return guarded([&] {
    const std::string s = delaylab::run_lyapunov(exp->cfg, str_or_empty(out_csv));
    if (json) *json = dup(s);
  });
}

dl_status dl_run_dimension(const dl_experiment* exp, const char* report, char** json) {
  DL_REQUIRE(exp);
  return guarded([&] {
    const std::string s = delaylab::run_dimension(exp->cfg, str_or_empty(report));
    if (json) *json = dup(s);
  });
}

dl_status dl_run_verify(const dl_experiment* exp, int invariants, int* all_passed, char** json) {
  DL_REQUIRE(exp);
  return guarded([&] {
    delaylab::VerifyOptions o;
    o.seed = exp->cfg.seed;
    o.workers = exp->cfg.workers;
    auto rows = delaylab::run_acceptance(o);
    if (invariants) {
      auto extra = delaylab::run_invariants(o);
      rows.insert(rows.end(), extra.begin(), extra.end());
    }
    bool ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ok = ok && rows[i].passed;
      nlohmann::json row = {{"name", rows[i].name}, {"passed", rows[i].passed}, {"detail", rows[i].detail}};
      if (i < 10) row["criterion"] = i + 1;
      arr.push_back(row);
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    if (json) *json = dup(nlohmann::json{{"schema_version", delaylab::kSchemaVersion},
                                         {"command", "verify"},
                                         {"all_passed", ok},
                                         {"rows", arr}}
                              .dump(2));
  });
}

}  // extern "C"
