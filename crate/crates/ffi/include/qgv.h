#ifndef QGV_H
#define QGV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Pass as `ell` or `k` when the entry does not take that index.
 */
#define QGV_NO_INDEX INT64_MIN

typedef enum QgvStatus {
  QGV_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QGV_STATUS_NULL_ARGUMENT = 1,
  QGV_STATUS_INVALID_UTF8 = 2,
  /**
   * Unknown id, wrong arity, unparsable rational or bad option.
   */
  QGV_STATUS_INVALID_ARGUMENT = 3,
  /**
   * Evaluation hit a vanishing denominator.
   */
  QGV_STATUS_POLE = 4,
  QGV_STATUS_ILL_CONDITIONED = 5,
  /**
   * Sampling or grid construction ran out of candidates.
   */
  QGV_STATUS_EXHAUSTED = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  QGV_STATUS_PANIC = 7,
} QgvStatus;

/**
 * Opaque handle to a finished verification report.
 */
typedef struct QgvReport QgvReport;

typedef struct QgvSuiteOptions {
  uint64_t seed;
  int64_t n_max;
  int64_t ell_max;
  uint32_t trials;
  uint32_t bitsize;
  uint32_t max_resample;
  /**
   * Bits for the numeric checks.
   */
  size_t precision;
  /**
   * Selects grid certification where available.
   */
  bool certify;
} QgvSuiteOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, static.
 */
const char *qgv_version(void);

/**
 * Message for the last failed call on this thread, or null.
 */
const char *qgv_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qgv_string_free(char *s);

size_t qgv_identity_count(void);

/**
 * Catalog name at `index`, static; null when out of range.
 */
const char *qgv_identity_name(size_t index);

/**
 * Evaluates one side of an exact entry and stores `"p/q"` in `*out`.
 *
 * `side` is `"lhs"` or `"rhs"`. `s` is ignored for classical entries; `b`
 * and `c` are read only for `PHI65`, where `x` is `sqrt(a)`.
 *
 * # Safety
 * String arguments must be null or nul-terminated; `out` must be writable.
 */
enum QgvStatus qgv_eval_side(const char *id,
                             const char *side,
                             int64_t n,
                             int64_t ell,
                             int64_t k,
                             const char *s,
                             const char *x,
                             const char *b,
                             const char *c,
                             char **out);

/**
 * Samples `trials` points for one instance and stores whether every trial
 * agreed in `*passed`.
 *
 * # Safety
 * `id` must be null or nul-terminated; `passed` must be writable.
 */
enum QgvStatus qgv_verify_instance(const char *id,
                                   int64_t n,
                                   int64_t ell,
                                   int64_t k,
                                   uint32_t trials,
                                   uint64_t seed,
                                   bool *passed);

/**
 * The defaults used by the command line.
 */
struct QgvSuiteOptions qgv_suite_options_default(void);

/**
 * Runs the suite over `ids[0..n_ids]`, or over everything when `n_ids` is
 * zero, and stores a new report handle in `*out`.
 *
 * # Safety
 * `opts` must be valid; `ids` must hold `n_ids` valid strings; `out` must
 * be writable.
 */
enum QgvStatus qgv_run_suite(const struct QgvSuiteOptions *opts,
                             const char *const *ids,
                             size_t n_ids,
                             struct QgvReport **out);

/**
 * Copies the pass, fail and skipped counts out of a report.
 *
 * # Safety
 * `report` must be a live handle; the counters must be writable.
 */
enum QgvStatus qgv_report_summary(const struct QgvReport *report,
                                  size_t *pass,
                                  size_t *fail,
                                  size_t *skipped);

/**
 * The report as JSON, caller-owned; null on a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
char *qgv_report_to_json(const struct QgvReport *report);

/**
 * Releases a report. Null is ignored.
 *
 * # Safety
 * `report` must come from [`qgv_run_suite`] and not have been freed.
 */
void qgv_report_free(struct QgvReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QGV_H */
