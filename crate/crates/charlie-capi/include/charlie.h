#ifndef CHARLIE_H
#define CHARLIE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; nonzero values are errors except `CHARLIE_VERIFY_FAIL`,
 * which reports a completed verification whose claim is false.
 */
typedef enum CharlieStatus {
  CHARLIE_STATUS_OK = 0,
  CHARLIE_STATUS_VERIFY_FAIL = 1,
  CHARLIE_STATUS_NOT_PRIME = 2,
  CHARLIE_STATUS_NOT_IN_SUBFIELD = 3,
  CHARLIE_STATUS_ZERO_ARGUMENT = 4,
  CHARLIE_STATUS_ZERO_CONSTANT_TERM = 5,
  CHARLIE_STATUS_SIZE_MISMATCH = 6,
  CHARLIE_STATUS_NOT_SELF_CONJUGATE = 7,
  CHARLIE_STATUS_TOO_FEW_VARIABLES = 8,
  CHARLIE_STATUS_RESOURCE_BOUND = 9,
  CHARLIE_STATUS_MATCH_FAILURE = 10,
  CHARLIE_STATUS_INTERNAL = 11,
  CHARLIE_STATUS_USAGE = 12,
  CHARLIE_STATUS_IO = 13,
  CHARLIE_STATUS_JSON = 14,
  CHARLIE_STATUS_PANIC = 15,
} CharlieStatus;

/**
 * Opaque handle to a fully built character table.
 */
typedef struct CharlieTable CharlieTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the most recent error on this thread.  The pointer is
 * valid until the next failing call on the same thread; do not free it.
 */
const char *charlie_last_error(void);

/**
 * Release a string returned by this library.
 */
void charlie_string_free(char *s);

/**
 * Build the character table of the group (`group`: 0 general linear,
 * 1 unitary) and store a handle in `out`.
 */
enum CharlieStatus charlie_table_build(int group,
                                       uintptr_t n,
                                       uint64_t q,
                                       struct CharlieTable **out);

/**
 * Release a table handle.
 */
void charlie_table_free(struct CharlieTable *table);

/**
 * Number of irreducible characters (equals the number of classes).
 */
enum CharlieStatus charlie_table_size(const struct CharlieTable *table, uintptr_t *out);

/**
 * Order of the group.
 */
enum CharlieStatus charlie_table_order(const struct CharlieTable *table, uint64_t *out);

/**
 * Degree of character `i`; fails with `CHARLIE_USAGE` when the index is
 * out of range or the degree overflows an unsigned 64-bit integer.
 */
enum CharlieStatus charlie_table_degree(const struct CharlieTable *table,
                                        uintptr_t i,
                                        uint64_t *out);

/**
 * Size of conjugacy class `j`.
 */
enum CharlieStatus charlie_table_class_size(const struct CharlieTable *table,
                                            uintptr_t j,
                                            uint64_t *out);

/**
 * Whether character `i` is real-valued (1 or 0).
 */
enum CharlieStatus charlie_table_row_is_real(const struct CharlieTable *table,
                                             uintptr_t i,
                                             int *out);

/**
 * The full table as a JSON document; release with `charlie_string_free`.
 */
enum CharlieStatus charlie_table_json(const struct CharlieTable *table, char **out);

/**
 * Run one verification routine by its identifier (as in the command-line
 * tool), for one group kind (0, 1) or both (-1).  Returns `CHARLIE_OK`
 * when the claim holds, `CHARLIE_VERIFY_FAIL` when it is refuted, and an
 * error status otherwise.  When `report_out` is non-null it receives the
 * JSON report.
 */
enum CharlieStatus charlie_verify(const char *theorem,
                                  int group,
                                  uintptr_t n,
                                  uint64_t q,
                                  char **report_out);

/**
 * The count of real-valued regular characters (equivalently semisimple
 * ones) from the closed-form parity formula.
 */
enum CharlieStatus charlie_count_real(uintptr_t n, uint64_t q, uint64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHARLIE_H */
