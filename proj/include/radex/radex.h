/*
 * radex — exact simulation, closed-form evaluation, invariant reduction and
 * symmetry verification for a coupled second-order rational difference
 * system.
 *
 * C API: opaque handles, integer status codes, caller-freed strings. Every
 * function is safe to call from plain C; errors never escape as C++
 * exceptions. Strings returned through out-parameters are heap-allocated
 * and must be released with radex_string_free().
 *
 * Status codes double as the CLI exit-code contract:
 *   0  success
 *   1  usage or configuration error
 *   2  forbidden instance (a denominator vanished)
 *   3  verification mismatch
 *   4  internal error (never expected)
 */
#ifndef RADEX_H
#define RADEX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum radex_status {
    RADEX_OK = 0,
    RADEX_ERR_USAGE = 1,
    RADEX_ERR_FORBIDDEN = 2,
    RADEX_ERR_MISMATCH = 3,
    RADEX_ERR_INTERNAL = 4
} radex_status;

typedef struct radex_config radex_config;
typedef struct radex_trajectory radex_trajectory;

const char* radex_version(void);

/* Free any string returned through a char** out-parameter. NULL is fine. */
void radex_string_free(char* s);

/* Parse a rational literal ("p", "-p", "p/q") and return its canonical
 * form. On error returns RADEX_ERR_USAGE and, when err_msg is non-NULL,
 * stores a description. */
radex_status radex_rational_normalize(const char* text, char** out_canonical, char** err_msg);

/* Configuration documents (JSON, strict schema). */
radex_status radex_config_parse(const char* json_text, radex_config** out_config, char** err_msg);
radex_status radex_config_load(const char* path, radex_config** out_config, char** err_msg);
void radex_config_free(radex_config* config);

/* Exact iteration as a handle, for embedding. Rows run n = -1 .. last. */
radex_status radex_simulate(const radex_config* config, long steps, radex_trajectory** out_traj,
                            char** err_msg);
void radex_trajectory_free(radex_trajectory* traj);
size_t radex_trajectory_size(const radex_trajectory* traj);
radex_status radex_trajectory_row(const radex_trajectory* traj, size_t i, long* out_n,
                                  char** out_x, char** out_y);
int radex_trajectory_is_singular(const radex_trajectory* traj);
radex_status radex_trajectory_singularity(const radex_trajectory* traj, long* out_step,
                                          char** out_factor);

/* Command surface. Each call renders the same document the CLI prints and
 * returns the exit status the CLI should use. `format` is "csv" or "json"
 * where a format applies; report-style commands emit plain text. A negative
 * steps/horizon means "use the config's defaults.horizon, else 10". */
radex_status radex_cmd_simulate(const radex_config* config, long steps, const char* format,
                                char** out_doc, char** err_msg);
radex_status radex_cmd_closed_form(const radex_config* config, const char* family,
                                   const char* indices, const char* format, char** out_doc,
                                   char** err_msg);
radex_status radex_cmd_compare(const radex_config* config, long steps, int inject_mismatch,
                               char** out_doc, char** err_msg);
radex_status radex_cmd_verify_symmetry(const radex_config* config, const char* generators,
                                       long samples, unsigned long long seed, char** out_doc,
                                       char** err_msg);
radex_status radex_cmd_forbidden(const radex_config* config, long horizon, char** out_doc,
                                 char** err_msg);
radex_status radex_cmd_reduce(const radex_config* config, long steps, const char* format,
                              char** out_doc, char** err_msg);

#ifdef __cplusplus
}
#endif

#endif /* RADEX_H */
