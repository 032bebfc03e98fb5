#ifndef SLOPELAB_H
#define SLOPELAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = -1,
  SL_STATUS_PARSE = -2,
  SL_STATUS_DOMAIN = -3,
  SL_STATUS_INTERNAL = -4,
  SL_STATUS_PANIC = -5,
  SL_STATUS_OVERFLOW = -6,
} SlStatus;

/**
 * Which side of the classification a verdict landed on, and the shape found.
 */
typedef enum SlVerdictKind {
  SL_VERDICT_KIND_PATTERN_A = 1,
  SL_VERDICT_KIND_PATTERN_B = 2,
  SL_VERDICT_KIND_PATTERN_C = 3,
  SL_VERDICT_KIND_WITNESS_T1 = 11,
  SL_VERDICT_KIND_WITNESS_T2 = 12,
  SL_VERDICT_KIND_WITNESS_T3 = 13,
  SL_VERDICT_KIND_WITNESS_T4 = 14,
  SL_VERDICT_KIND_WITNESS_T5 = 15,
} SlVerdictKind;

/**
 * Opaque slope type.
 */
typedef struct SlSlopeType SlSlopeType;

/**
 * Flattened classification result.
 *
 * For patterns `params` is `{h1, h, h0}`; for witnesses it holds the family
 * parameters (`{c, h}` or `{h1, h2}`) padded with zeros.
 */
typedef struct SlVerdict {
  bool equal;
  enum SlVerdictKind kind;
  uint64_t params[3];
} SlVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sl_last_error(void);

/**
 * Parses a slope specification such as `"-1/2^2,1/3^3"`.
 *
 * # Safety
 * `spec` must be NUL-terminated; `out_handle` must be writable.
 */
enum SlStatus sl_slope_type_parse(const char *spec, struct SlSlopeType **out_handle);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `t` must come from this library and not be freed twice.
 */
void sl_slope_type_free(struct SlSlopeType *t);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sl_string_free(char *s);

/**
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_slope_type_rank(const struct SlSlopeType *t, uint64_t *rank);

/**
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_slope_type_degree(const struct SlSlopeType *t, int64_t *degree);

/**
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_slope_type_tensor(const struct SlSlopeType *a,
                                   const struct SlSlopeType *b,
                                   struct SlSlopeType **result);

/**
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_slope_type_dual(const struct SlSlopeType *t, struct SlSlopeType **result);

/**
 * Canonical specification string, e.g. `"-1/2^2,1/3^3"`.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_slope_type_to_spec(const struct SlSlopeType *t, char **spec);

/**
 * Compact JSON with the same shape as the CLI's slope type objects.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_slope_type_to_json(const struct SlSlopeType *t, char **json);

/**
 * `dim Hom(a, b)`; `*infinite` is set when the dimension is infinite, in
 * which case `*dim` is 0.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_hom_dim(const struct SlSlopeType *a,
                         const struct SlSlopeType *b,
                         uint64_t *dim,
                         bool *infinite);

/**
 * Classifies slope data in `[0,1]`. Fails with `SL_STATUS_DOMAIN` outside it.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_classify(const struct SlSlopeType *t, struct SlVerdict *verdict);

/**
 * Weak admissibility of the generic filtration with Hodge datum `(h, f)`.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_wa_generic(const struct SlSlopeType *t, int64_t h, uint64_t f, bool *result);

/**
 * Whether any weakly admissible filtration with Hodge datum `(h, f)` exists.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_wa_exists(const struct SlSlopeType *t, int64_t h, uint64_t f, bool *result);

/**
 * Candidate slope types of the lattice module as a JSON array, in the same
 * order and shape as `slopelab enumerate`.
 *
 * # Safety
 * Pointers must be valid or NULL.
 */
enum SlStatus sl_enumerate_candidates(const struct SlSlopeType *t,
                                      int64_t h,
                                      uint64_t f,
                                      char **json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SLOPELAB_H */
