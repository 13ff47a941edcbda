#ifndef LUSZTIG_FOCK_H
#define LUSZTIG_FOCK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum LfStatus {
  LF_STATUS_OK = 0,
  /**
   * A required pointer was null.
   */
  LF_STATUS_NULL_POINTER = 1,
  /**
   * Malformed or out-of-range input (partition literal, modulus, index).
   */
  LF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The requested size exceeds the handle's bound.
   */
  LF_STATUS_BOUND_EXCEEDED = 3,
  /**
   * The computation failed or an entry does not fit the output type.
   */
  LF_STATUS_COMPUTATION_FAILED = 4,
  /**
   * A panic was caught at the boundary.
   */
  LF_STATUS_PANIC = 5,
} LfStatus;

/**
 * Canonical-basis engine for one modulus and convention; caches its results.
 */
typedef struct LfEngine LfEngine;

/**
 * A square integer matrix with partition labels.
 */
typedef struct LfMatrix LfMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *lf_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library that was not yet freed.
 */
void lf_string_free(char *s);

/**
 * Creates an engine for modulus `e` (at least 2). `classical` selects the
 * classical label convention instead of the transposed default. `max_n`
 * bounds the degree of canonical-basis computations; 0 means 8.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum LfStatus lf_engine_new(uint32_t e, bool classical, uint32_t max_n, struct LfEngine **out);

/**
 * Releases an engine. Null is ignored.
 *
 * # Safety
 * `engine` must be null or a handle from [`lf_engine_new`] that was not yet freed.
 */
void lf_engine_free(struct LfEngine *engine);

/**
 * `D_n` (rows `G⁺` at `v = 1`) or, with `inverse`, `E_n` (rows `G⁻`), on all
 * partitions of `n` in decreasing lexicographic order.
 *
 * # Safety
 * `engine` must be a live handle and `out` valid for writing one pointer.
 */
enum LfStatus lf_engine_decomposition_matrix(struct LfEngine *engine,
                                             uint32_t n,
                                             bool inverse,
                                             struct LfMatrix **out);

/**
 * `G⁺(λ)` or, with `minus`, `G⁻(λ)` as a JSON object mapping partition
 * literals to Laurent polynomials in `v`.
 *
 * # Safety
 * `engine` must be a live handle, `lambda` a NUL-terminated partition literal
 * such as `"3,1"`, and `out` valid for writing one pointer.
 */
enum LfStatus lf_engine_canonical_json(struct LfEngine *engine,
                                       const char *lambda,
                                       bool minus,
                                       char **out);

/**
 * e-core, e-quotient and weight of a partition as JSON.
 *
 * # Safety
 * `lambda` must be a NUL-terminated partition literal and `out` valid for writing one pointer.
 */
enum LfStatus lf_core_quotient_json(const char *lambda, uint32_t e, char **out);

/**
 * Releases a matrix. Null is ignored.
 *
 * # Safety
 * `matrix` must be null or a handle from this library that was not yet freed.
 */
void lf_matrix_free(struct LfMatrix *matrix);

/**
 * Number of rows (and columns); 0 for null.
 *
 * # Safety
 * `matrix` must be null or a live handle.
 */
size_t lf_matrix_dim(const struct LfMatrix *matrix);

/**
 * Entry at `(row, col)` as a 64-bit integer.
 *
 * # Safety
 * `matrix` must be a live handle and `out` valid for writing one `int64_t`.
 */
enum LfStatus lf_matrix_entry(const struct LfMatrix *matrix, size_t row, size_t col, int64_t *out);

/**
 * Partition literal labelling row and column `index`.
 *
 * # Safety
 * `matrix` must be a live handle and `out` valid for writing one pointer.
 */
enum LfStatus lf_matrix_label(const struct LfMatrix *matrix, size_t index, char **out);

/**
 * The matrix as `{"labels": [...], "entries": [[...]]}`.
 *
 * # Safety
 * `matrix` must be a live handle and `out` valid for writing one pointer.
 */
enum LfStatus lf_matrix_to_json(const struct LfMatrix *matrix, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LUSZTIG_FOCK_H */
