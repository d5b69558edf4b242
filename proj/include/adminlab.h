/*
 * adminlab — adversarial dependence minimization lab.
 *
 * C interface to the experiment runners. All heavy lifting lives in the
 * shared library; callers hand over a command name plus key=value
 * configuration, get back an opaque result handle, and read JSON/summary
 * strings from it. Results are deterministic for a fixed command + seed.
 */
#ifndef ADMINLAB_H
#define ADMINLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef ADMINLAB_API
#define ADMINLAB_API
#endif

/* Status codes double as process exit codes in the CLI. */
typedef enum adminlab_status {
    ADMINLAB_OK = 0,
    ADMINLAB_STATUS_CONFIG = 2,  /* bad usage, unknown keys, malformed input */
    ADMINLAB_STATUS_NUMERIC = 3  /* diverged or failed numerically */
} adminlab_status;

typedef struct adminlab_result adminlab_result;

ADMINLAB_API const char* adminlab_version(void);

/* Message for the most recent failure on this thread; empty if none. */
ADMINLAB_API const char* adminlab_last_error(void);

/* Comma-separated list of supported commands. */
ADMINLAB_API const char* adminlab_commands(void);

/*
 * Runs one experiment command ("dcorr", "pica", "converge", "classify",
 * "ssl", "sweep-margin", "ablate"). keys/values are n_kv parallel arrays
 * of configuration overrides; unknown keys are rejected. out_dir may be
 * NULL for no file output; otherwise result.json and the command's CSV
 * artifacts are written there. On success *out owns the result and must
 * be released with adminlab_result_free. On failure the status is
 * returned, adminlab_last_error() carries the message, and any partial
 * artifacts (run logs of a diverged run) remain on disk.
 */
ADMINLAB_API int adminlab_run(const char* command, const char* const* keys,
                              const char* const* values, size_t n_kv, const char* out_dir,
                              adminlab_result** out);

/* Pretty-printed result JSON (config echo + metrics). Owned by the handle. */
ADMINLAB_API const char* adminlab_result_json(const adminlab_result* result);

/* One-line human summary. Owned by the handle. */
ADMINLAB_API const char* adminlab_result_summary(const adminlab_result* result);

ADMINLAB_API void adminlab_result_free(adminlab_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ADMINLAB_H */
