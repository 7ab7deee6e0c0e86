#ifndef WQ_FFI_H
#define WQ_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WqStatus {
  WQ_STATUS_OK = 0,
  WQ_STATUS_NULL_POINTER = 1,
  WQ_STATUS_INVALID_UTF8 = 2,
  WQ_STATUS_CONFIG = 3,
  WQ_STATUS_UNKNOWN_COMMAND = 4,
  WQ_STATUS_ARITHMETIC = 5,
  WQ_STATUS_PANIC = 6,
} WqStatus;

/**
 * A finished report with its JSON and text renderings.
 */
typedef struct WqReport WqReport;

/**
 * Parsed session configuration.
 */
typedef struct WqSession WqSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next call.
 */
const char *wq_last_error(void);

/**
 * Parses a TOML session config.
 *
 * # Safety
 * `toml` must be a NUL-terminated string; `out` must be writable.
 */
enum WqStatus wq_session_new(const char *toml, struct WqSession **out);

/**
 * # Safety
 * `session` must come from `wq_session_new` (or be null).
 */
enum WqStatus wq_session_set_seed(struct WqSession *session, uint64_t seed);

/**
 * # Safety
 * `session` must come from `wq_session_new` and not be used afterwards.
 */
void wq_session_free(struct WqSession *session);

/**
 * Runs one command (or `all`). Failing checks still produce a report;
 * see `wq_report_failed`.
 *
 * # Safety
 * `session` must be a live handle, `command` a NUL-terminated string, `out` writable.
 */
enum WqStatus wq_run(const struct WqSession *session, const char *command, struct WqReport **out);

/**
 * JSON rendering, owned by the report.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
const char *wq_report_json(const struct WqReport *report);

/**
 * Text rendering, owned by the report.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
const char *wq_report_text(const struct WqReport *report);

/**
 * 1 if some check failed, 0 if none did, -1 for a null handle.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
int32_t wq_report_failed(const struct WqReport *report);

/**
 * Writes pass, fail and inconclusive counts. Null output pointers are skipped.
 *
 * # Safety
 * `report` must be a live handle; the outputs writable or null.
 */
enum WqStatus wq_report_counts(const struct WqReport *report,
                               uintptr_t *pass,
                               uintptr_t *fail,
                               uintptr_t *inconclusive);

/**
 * # Safety
 * `report` must come from `wq_run` and not be used afterwards.
 */
void wq_report_free(struct WqReport *report);

/**
 * q-binomial `[m choose n]` for `q = v^(2 d root_length)`, rendered as a
 * rational function of `v`. Free the result with `wq_string_free`.
 *
 * # Safety
 * `out` must be writable.
 */
enum WqStatus wq_qbinom(int64_t m, int64_t n, int64_t d, int64_t root_length, char **out);

/**
 * # Safety
 * `s` must come from this library (or be null).
 */
void wq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WQ_FFI_H */
