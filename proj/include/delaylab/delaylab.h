/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the delaylab core. Every function returns a dl_status;
 * on failure dl_last_error() describes the problem for the calling thread.
 * Strings handed out through `char**` are owned by the caller and released
 * with dl_free_string().
 */
#ifndef DELAYLAB_DELAYLAB_H
#define DELAYLAB_DELAYLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DL_API __declspec(dllexport)
#else
#define DL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_INDEX = 1,
  DL_ERR_DOMAIN = 2,
  DL_ERR_DIMENSION = 3,
  DL_ERR_ALIGNMENT = 4,
  DL_ERR_CONFIG = 5,
  DL_ERR_INSUFFICIENT_WINDOW = 6,
  DL_ERR_NUMERIC = 7,
  DL_ERR_IO = 8,
  DL_ERR_INVALID_ARGUMENT = 9,
  DL_ERR_INTERNAL = 10
} dl_status;

typedef struct dl_experiment dl_experiment;

DL_API const char* dl_version(void);
DL_API const char* dl_status_name(dl_status status);
/* Message of the last failed call on this thread; "" when none. */
DL_API const char* dl_last_error(void);
DL_API void dl_free_string(char* s);

/* Default configuration, optionally overridden by an INI file or text.
 * DELAYLAB_SEED, when set, replaces noise.seed. */
DL_API dl_status dl_experiment_create(dl_experiment** out);
DL_API dl_status dl_experiment_from_file(const char* path, dl_experiment** out);
DL_API dl_status dl_experiment_from_string(const char* ini_text, dl_experiment** out);
DL_API void dl_experiment_destroy(dl_experiment* exp);

DL_API dl_status dl_set_seed(dl_experiment* exp, uint64_t seed);
DL_API dl_status dl_set_workers(dl_experiment* exp, size_t workers);
DL_API dl_status dl_set_t_final(dl_experiment* exp, double t_final);
DL_API dl_status dl_set_ensemble(dl_experiment* exp, size_t ensemble);
/* Comma-separated list of pullback times, e.g. "10,20,40". */
DL_API dl_status dl_set_pullback(dl_experiment* exp, const char* times);
DL_API dl_status dl_set_lyapunov(dl_experiment* exp, size_t m, size_t intervals, size_t paths);

/* Configuration echo, one "section.key = value" per line. */
DL_API dl_status dl_config_echo(const dl_experiment* exp, char** text);
/* Output paths from the [output] section; `which` is one of
 * "trajectory", "cloud", "report", "q", "dimension". */
DL_API dl_status dl_output_path(const dl_experiment* exp, const char* which, char** path);

/* Each run writes its files and hands back a JSON summary. A NULL or empty
 * path skips that file where the command allows it. */
DL_API dl_status dl_run_simulate(const dl_experiment* exp, const char* out_csv, char** json);
DL_API dl_status dl_run_attractor(const dl_experiment* exp, const char* cloud_csv,
                                  const char* report_json, char** json);
DL_API dl_status dl_run_lyapunov(const dl_experiment* exp, const char* out_csv, char** json);
DL_API dl_status dl_run_dimension(const dl_experiment* exp, const char* report_json, char** json);

/* Acceptance criteria 1-10 and, with `invariants` nonzero, the extra
 * invariant rows. `all_passed` receives 1 when every row passed. The JSON
 * lists {name, passed, detail} per row. */
DL_API dl_status dl_run_verify(const dl_experiment* exp, int invariants, int* all_passed,
                               char** json);

#ifdef __cplusplus
}
#endif

#endif /* DELAYLAB_DELAYLAB_H */
