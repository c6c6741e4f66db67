#ifndef QUANDLE_H
#define QUANDLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum QdlStatus {
  QDL_STATUS_OK = 0,
  QDL_STATUS_NULL_POINTER = 1,
  QDL_STATUS_INVALID_UTF8 = 2,
  QDL_STATUS_PARSE = 3,
  QDL_STATUS_INVALID = 4,
  QDL_STATUS_CAP_EXCEEDED = 5,
  QDL_STATUS_BUDGET_EXCEEDED = 6,
  QDL_STATUS_OUT_OF_RANGE = 7,
  QDL_STATUS_BUFFER_TOO_SMALL = 8,
  QDL_STATUS_PANIC = 9,
} QdlStatus;

typedef enum QdlGroupKind {
  QDL_GROUP_KIND_INNER = 0,
  QDL_GROUP_KIND_DISPLACEMENT = 1,
} QdlGroupKind;

/**
 * A validated finite quandle.
 */
typedef struct QdlQuandle QdlQuandle;

/**
 * The result of an Euler characteristic computation.
 */
typedef struct QdlReport QdlReport;

/**
 * Plain-data view of a report. `chi` is meaningful only when `exact` is set,
 * `dis_order` only when `has_dis_order` is set.
 */
typedef struct QdlEulerSummary {
  bool exact;
  size_t chi;
  size_t upper_bound;
  bool has_dis_order;
  size_t dis_order;
} QdlEulerSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *qdl_version(void);

/**
 * Message for the most recent failure on this thread, or an empty string.
 * Valid until the next library call on the same thread.
 */
const char *qdl_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void qdl_string_free(char *s);

/**
 * Parses and resolves a JSON quandle spec.
 *
 * # Safety
 * `spec_json` must be NULL or a NUL-terminated string; `out` must be NULL
 * or writable.
 */
enum QdlStatus qdl_quandle_from_json(const char *spec_json, struct QdlQuandle **out);

/**
 * Validates a row-major `n × n` table where `table[x*n + y] = s_x(y)`.
 *
 * # Safety
 * `table` must point to `n * n` readable values; `out` must be NULL or
 * writable.
 */
enum QdlStatus qdl_quandle_from_table(const uint32_t *table, size_t n, struct QdlQuandle **out);

/**
 * # Safety
 * `q` must be NULL or a handle from this library, not yet freed.
 */
void qdl_quandle_free(struct QdlQuandle *q);

/**
 * Number of elements, or 0 for a NULL handle.
 *
 * # Safety
 * `q` must be NULL or a live handle.
 */
size_t qdl_quandle_size(const struct QdlQuandle *q);

/**
 * Writes `s_x(y)` to `out`.
 *
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_act(const struct QdlQuandle *q, size_t x, size_t y, size_t *out);

/**
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_is_trivial(const struct QdlQuandle *q, bool *out);

/**
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_is_connected(const struct QdlQuandle *q, bool *out);

/**
 * Decides whether the automorphism group acts transitively. Returns
 * `BudgetExceeded` if the search needs more than `budget` nodes.
 *
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_is_homogeneous(const struct QdlQuandle *q, uint64_t budget, bool *out);

/**
 * Order of `Inn(X)` or `Dis(X)`. Returns `CapExceeded` past `cap` elements.
 *
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_group_order(const struct QdlQuandle *q,
                                       enum QdlGroupKind kind,
                                       size_t cap,
                                       size_t *out);

/**
 * # Safety
 * `a` and `b` must be NULL or live handles; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_product(const struct QdlQuandle *a,
                                   const struct QdlQuandle *b,
                                   struct QdlQuandle **out);

/**
 * # Safety
 * `a` and `b` must be NULL or live handles; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_free_union(const struct QdlQuandle *a,
                                      const struct QdlQuandle *b,
                                      struct QdlQuandle **out);

/**
 * Canonical table JSON; free the result with [`qdl_string_free`].
 *
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_quandle_table_json(const struct QdlQuandle *q, char **out);

/**
 * Computes the Euler characteristic by enumerating `Dis(X)` up to `cap`
 * elements. A report is produced even when the cap is reached; its summary
 * then has `exact` unset.
 *
 * # Safety
 * `q` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum QdlStatus qdl_euler(const struct QdlQuandle *q, size_t cap, struct QdlReport **out);

/**
 * Random search for a fixed-point-free element of `Dis(X)`. Writes true to
 * `found` and the element to `witness` (which must hold `size` values) on a
 * hit.
 *
 * # Safety
 * `q` must be NULL or a live handle; `witness` must be NULL or point to
 * `qdl_quandle_size(q)` writable values; `found` must be NULL or writable.
 */
enum QdlStatus qdl_zero_witness_search(const struct QdlQuandle *q,
                                       size_t trials,
                                       uint64_t seed,
                                       uint32_t *witness,
                                       bool *found);

/**
 * # Safety
 * `r` must be NULL or a report handle, not yet freed.
 */
void qdl_report_free(struct QdlReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report; `out` must be NULL or writable.
 */
enum QdlStatus qdl_report_summary(const struct QdlReport *r, struct QdlEulerSummary *out);

/**
 * Copies the witness permutation into `buf`. `written` receives the
 * witness length, which is 0 for an inexact report. Returns
 * `BufferTooSmall` if `len` is shorter than the witness.
 *
 * # Safety
 * `r` must be NULL or a live report; `buf` must be NULL or point to `len`
 * writable values; `written` must be NULL or writable.
 */
enum QdlStatus qdl_report_witness(const struct QdlReport *r,
                                  uint32_t *buf,
                                  size_t len,
                                  size_t *written);

/**
 * The report as JSON; free the result with [`qdl_string_free`].
 *
 * # Safety
 * `r` must be NULL or a live report; `out` must be NULL or writable.
 */
enum QdlStatus qdl_report_to_json(const struct QdlReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUANDLE_H */
