#ifndef COMPOUND_H
#define COMPOUND_H

#pragma once

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call.
 */
typedef enum CompoundStatus {
  COMPOUND_STATUS_OK = 0,
  COMPOUND_STATUS_NULL_POINTER = 1,
  COMPOUND_STATUS_INVALID_UTF8 = 2,
  COMPOUND_STATUS_INVALID_ARGUMENT = 3,
  COMPOUND_STATUS_INVALID_PARTITION = 4,
  COMPOUND_STATUS_OUT_OF_RANGE = 5,
  COMPOUND_STATUS_OVERFLOW = 6,
  COMPOUND_STATUS_COMPUTATION_FAILED = 7,
  COMPOUND_STATUS_PANIC = 8,
} CompoundStatus;

/**
 * Row and column order of a matrix.
 */
typedef enum CompoundOrder {
  COMPOUND_ORDER_CANONICAL = 0,
  COMPOUND_ORDER_PRINTED = 1,
} CompoundOrder;

/**
 * Output format for [`compound_matrix_to_string`].
 */
typedef enum CompoundFormat {
  COMPOUND_FORMAT_JSON = 0,
  COMPOUND_FORMAT_CSV = 1,
  COMPOUND_FORMAT_LATEX = 2,
} CompoundFormat;

/**
 * An integer matrix with partition labels.
 */
typedef struct CompoundMatrix CompoundMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *compound_last_error(void);

/**
 * Builds a matrix. `kind` is one of `"A"`, `"Gamma"`, `"G"`, `"AtA"` or
 * `"block"`; `n0` and `n1` are read only for `"block"`.
 *
 * # Safety
 * `kind` must be a valid C string and `out` a valid pointer.
 */
enum CompoundStatus compound_matrix_new(const char *kind,
                                        size_t n,
                                        size_t n0,
                                        size_t n1,
                                        enum CompoundOrder order,
                                        struct CompoundMatrix **out);

/**
 * # Safety
 * `m` must come from [`compound_matrix_new`] and not have been freed; null is ignored.
 */
void compound_matrix_free(struct CompoundMatrix *m);

/**
 * Number of rows, or 0 for a null matrix.
 *
 * # Safety
 * `m` must be null or a live matrix.
 */
size_t compound_matrix_rows(const struct CompoundMatrix *m);

/**
 * Number of columns, or 0 for a null matrix.
 *
 * # Safety
 * `m` must be null or a live matrix.
 */
size_t compound_matrix_cols(const struct CompoundMatrix *m);

/**
 * Entry as a 64-bit integer; fails with `Overflow` if it does not fit.
 *
 * # Safety
 * `m` must be a live matrix and `out` a valid pointer.
 */
enum CompoundStatus compound_matrix_entry_i64(const struct CompoundMatrix *m,
                                              size_t row,
                                              size_t col,
                                              int64_t *out);

/**
 * Entry in decimal.
 *
 * # Safety
 * `m` must be a live matrix and `out` a valid pointer.
 */
enum CompoundStatus compound_matrix_entry_string(const struct CompoundMatrix *m,
                                                 size_t row,
                                                 size_t col,
                                                 char **out);

/**
 * Determinant in decimal.
 *
 * # Safety
 * `m` must be a live matrix and `out` a valid pointer.
 */
enum CompoundStatus compound_matrix_determinant(const struct CompoundMatrix *m, char **out);

/**
 * Whole matrix as JSON, CSV or LaTeX, the same text the command line prints.
 *
 * # Safety
 * `m` must be a live matrix and `out` a valid pointer.
 */
enum CompoundStatus compound_matrix_to_string(const struct CompoundMatrix *m,
                                              enum CompoundFormat format,
                                              char **out);

/**
 * Applies `map` (`"phi"`, `"psi"`, `"glaisher"`, `"glaisher-inverse"`,
 * `"habacus"` or `"2quot"`) to a partition such as `"11,10,5,3,2"` and
 * writes a JSON object.
 *
 * # Safety
 * `map` and `partition` must be valid C strings and `out` a valid pointer.
 */
enum CompoundStatus compound_decompose(const char *map, const char *partition, char **out);

/**
 * Runs one claim at one `n` with the default caps. `passed` receives the
 * verdict and `report` the JSON report; a failing claim still returns `Ok`.
 *
 * # Safety
 * `claim` must be a valid C string; `passed` and `report` valid pointers.
 */
enum CompoundStatus compound_verify(const char *claim, size_t n, bool *passed, char **report);

/**
 * `k_n`, the exponent in `|det A_n| = 2^k_n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CompoundStatus compound_k_value(size_t n, uint64_t *out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void compound_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPOUND_H */
