#ifndef SURFLINK_H
#define SURFLINK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `SL_OK` is zero; every other value is an error.
 */
typedef enum SlStatus {
  SL_OK = 0,
  SL_NULL_POINTER = 1,
  SL_INVALID_UTF8 = 2,
  SL_SYNTAX = 3,
  SL_GENERATOR_OUT_OF_RANGE = 4,
  SL_STRAND_MISMATCH = 5,
  SL_NON_COMMUTING = 6,
  SL_INVALID_FAMILY = 7,
  SL_INDEX_OUT_OF_RANGE = 8,
  SL_DIMENSION_MISMATCH = 9,
  SL_INVALID_ARGUMENT = 10,
  SL_INTERNAL = 11,
  SL_PANIC = 12,
} SlStatus;

/**
 * Outcome kind of an abelianness check.
 */
typedef enum SlVerdict {
  SL_ABELIAN = 0,
  SL_NON_ABELIAN = 1,
  SL_INCONCLUSIVE = 2,
} SlVerdict;

/**
 * Opaque braid word.
 */
typedef struct SlBraid SlBraid;

/**
 * Opaque torus-covering link with its defining input.
 */
typedef struct SlLink SlLink;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *sl_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sl_string_free(char *s);

/**
 * Parses a braid word such as `"s1^2 s3^-1"` or `"1,1,-3"` on `strands` strands.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SlStatus sl_braid_parse(const char *text, size_t strands, struct SlBraid **out);

/**
 * Builds a family braid. `family` is one of `'X' 'Y' 'Z' 'P' 'Q'`; `l` and `e`
 * are ignored where the family has no such parameter. `verbatim` selects the
 * literal reading of the Y descending factor.
 *
 * # Safety
 * `e` must point to three readable values; `out` must be writable.
 */
enum SlStatus sl_braid_family(char family,
                              uint32_t k,
                              uint32_t l,
                              const int8_t *e,
                              bool verbatim,
                              struct SlBraid **out);

/**
 * `Δ^{2n}` on `strands` strands.
 *
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_braid_full_twist(size_t strands, int64_t n, struct SlBraid **out);

/**
 * # Safety
 * `b` must be a live braid handle; `out` must be writable.
 */
enum SlStatus sl_braid_strands(const struct SlBraid *b, size_t *out);

/**
 * Prints the braid in the parser's token syntax. Free the result with [`sl_string_free`].
 *
 * # Safety
 * `b` must be a live braid handle; `out` must be writable.
 */
enum SlStatus sl_braid_to_string(const struct SlBraid *b, char **out);

/**
 * # Safety
 * `b` must come from this library and not be freed twice. Null is ignored.
 */
void sl_braid_free(struct SlBraid *b);

/**
 * Link from a commuting basis pair. Fails with `SL_NON_COMMUTING` otherwise.
 *
 * # Safety
 * `a`, `b` must be live braid handles; `out` must be writable.
 */
enum SlStatus sl_link_new(const struct SlBraid *a, const struct SlBraid *b, struct SlLink **out);

/**
 * Link `S_m(a, Δ^{2n})`.
 *
 * # Safety
 * `a` must be a live braid handle; `out` must be writable.
 */
enum SlStatus sl_link_new_full_twist(const struct SlBraid *a, int64_t n, struct SlLink **out);

/**
 * # Safety
 * `l` must come from this library and not be freed twice. Null is ignored.
 */
void sl_link_free(struct SlLink *l);

/**
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_component_count(const struct SlLink *l, size_t *out);

/**
 * Number of strands in component `i`.
 *
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_degree(const struct SlLink *l, size_t i, size_t *out);

/**
 * Directional linking number; `direction` 0 is the `a` direction, 1 the `b` direction.
 *
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_lk(const struct SlLink *l,
                         uint32_t direction,
                         size_t i,
                         size_t j,
                         int64_t *out);

/**
 * Double linking number (0 or 1). Only defined for links built with
 * [`sl_link_new_full_twist`].
 *
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_dlk(const struct SlLink *l, size_t i, size_t j, uint8_t *out);

/**
 * Triple linking number `Tlk(i, j, k)`.
 *
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_tlk(const struct SlLink *l, size_t i, size_t j, size_t k, int64_t *out);

/**
 * Lower bound on the triple point number from the triple linking numbers.
 *
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_triple_point_bound(const struct SlLink *l, uint64_t *out);

/**
 * Abelianness check of the link group. A zero cap selects the default.
 * `rank` receives the free rank for abelian groups and 0 otherwise.
 *
 * # Safety
 * `l` must be a live link handle; `kind` and `rank` must be writable.
 */
enum SlStatus sl_link_abelian_verdict(const struct SlLink *l,
                                      size_t max_rules,
                                      size_t max_len,
                                      size_t max_passes,
                                      enum SlVerdict *kind,
                                      size_t *rank);

/**
 * Full JSON report (schema 1). With `with_verdict`, the abelianness check runs
 * under default caps.
 *
 * # Safety
 * `l` must be a live link handle; `out` must be writable.
 */
enum SlStatus sl_link_report_json(const struct SlLink *l, bool with_verdict, char **out);

/**
 * Necessary genus-rank condition for an abelian surface link with these genera.
 *
 * # Safety
 * `genera` must point to `len` readable values (may be null when `len` is 0);
 * `out` must be writable.
 */
enum SlStatus sl_genus_feasible(const uint64_t *genera, size_t len, bool *out);

/**
 * Runs a construction and returns its record as JSON: `kind` 0 is the
 * rank-`n` tower, 1 the high-genus family (`n > 4`). With `certify`, the
 * record carries an abelianness verdict under default caps.
 *
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_construct_json(uint32_t kind, size_t n, bool certify, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURFLINK_H */
