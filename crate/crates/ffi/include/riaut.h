/* C interface to the riaut library. All table handles are opaque; free them with riaut_table_free. Strings returned by the library are freed with riaut_string_free. */

#ifndef RIAUT_H
#define RIAUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes for every fallible entry point.
 */
typedef enum RiautStatus {
  RIAUT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  RIAUT_STATUS_NULL_POINTER,
  /**
   * A string argument was not valid UTF-8.
   */
  RIAUT_STATUS_INVALID_UTF8,
  /**
   * The text could not be parsed in the expected format.
   */
  RIAUT_STATUS_PARSE_ERROR,
  /**
   * The table or code violates a structural invariant (not a prefix
   * code, not maximal, empty, out-of-range letter, bad alphabet...).
   */
  RIAUT_STATUS_INVALID_ELEMENT,
  /**
   * The word lies outside the domain ideal of the table.
   */
  RIAUT_STATUS_UNDEFINED,
  /**
   * The two arguments live over different alphabets.
   */
  RIAUT_STATUS_ALPHABET_MISMATCH,
  /**
   * The requested comparison or factorization is not defined for these
   * arguments.
   */
  RIAUT_STATUS_DOMAIN_ERROR,
} RiautStatus;

/**
 * An element of the right-ideal automorphism monoid (opaque).
 */
typedef struct RiautTable RiautTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Detail message of the most recent failure on this thread. Owned by the
 * library; do not free. Valid until the next failing call on the thread.
 */
const char *riaut_last_error(void);

/**
 * Parses a table in text form over a k-letter alphabet into a new handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to a writable
 * pointer slot.
 */
enum RiautStatus riaut_table_parse(uint32_t k, const char *text, struct RiautTable **out);

/**
 * The identity map on the whole free monoid, `[^->^]`.
 *
 * # Safety
 * `out` must point to a writable pointer slot.
 */
enum RiautStatus riaut_table_identity(uint32_t k, struct RiautTable **out);

/**
 * Releases a table handle. Null is ignored.
 *
 * # Safety
 * `table` must be a handle returned by this library, not yet freed.
 */
void riaut_table_free(struct RiautTable *table);

/**
 * Renders a table in its canonical text form. The caller owns the returned
 * string and must release it with `riaut_string_free`.
 *
 * # Safety
 * `table` must be a live handle.
 */
char *riaut_table_to_text(const struct RiautTable *table);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by this library, not yet freed.
 */
void riaut_string_free(char *s);

/**
 * Composes two tables (`psi` after `phi`).
 *
 * # Safety
 * `psi` and `phi` must be live handles and `out` a writable pointer slot.
 */
enum RiautStatus riaut_compose(const struct RiautTable *psi,
                               const struct RiautTable *phi,
                               struct RiautTable **out);

/**
 * Inverts a table.
 *
 * # Safety
 * `table` must be a live handle and `out` a writable pointer slot.
 */
enum RiautStatus riaut_inverse(const struct RiautTable *table, struct RiautTable **out);

/**
 * The unique maximal essential extension of a table.
 *
 * # Safety
 * `table` must be a live handle and `out` a writable pointer slot.
 */
enum RiautStatus riaut_max_extend(const struct RiautTable *table, struct RiautTable **out);

/**
 * Applies the table to a word. Returns `Undefined` (leaving `out_word`
 * untouched) when the word is outside the domain ideal.
 *
 * # Safety
 * `table` must be a live handle, `word` a NUL-terminated string, and
 * `out_word` a writable pointer slot.
 */
enum RiautStatus riaut_apply(const struct RiautTable *table, const char *word, char **out_word);

/**
 * Table size (cardinality of the domain code).
 *
 * # Safety
 * `table` must be a live handle and `out` writable.
 */
enum RiautStatus riaut_table_size(const struct RiautTable *table, uintptr_t *out);

/**
 * Structural equality of two tables (equality as monoid elements).
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum RiautStatus riaut_table_eq(const struct RiautTable *left,
                                const struct RiautTable *right,
                                bool *out);

/**
 * Dictionary-order preservation check.
 *
 * # Safety
 * `table` must be a live handle and `out` writable.
 */
enum RiautStatus riaut_is_dict_preserving(const struct RiautTable *table, bool *out);

/**
 * J-order comparison: is `left <=_J right` (i.e. the domain code of `left`
 * at least as large)?
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum RiautStatus riaut_j_leq(const struct RiautTable *left,
                             const struct RiautTable *right,
                             bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIAUT_H */
