#ifndef ANTIBCH_H
#define ANTIBCH_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; nonzero values match the CLI exit codes where they
 * overlap (1 verification failure, 2 invalid argument, 3 guard).
 */
typedef enum AntibchStatus {
  AntibchOk = 0,
  AntibchVerificationFailed = 1,
  AntibchInvalidArgument = 2,
  AntibchGuardExceeded = 3,
  AntibchNullPointer = 4,
  AntibchInternalError = 5,
} AntibchStatus;

/**
 * Opaque cyclic-code handle bound to the tower that built it.
 */
typedef struct AntibchCode AntibchCode;

/**
 * Opaque tower handle: the ambient field GF(p^{2am}) with its norm-one
 * coordinate group.
 */
typedef struct AntibchTower AntibchTower;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build the tower for q = delta^m over characteristic p; delta must be a
 * power of p.
 *
 * # Safety
 * `out` must be a valid pointer to a writable handle slot.
 */
enum AntibchStatus antibch_tower_new(uint64_t p,
                                     uint64_t delta,
                                     uint64_t m,
                                     struct AntibchTower **out);

/**
 * # Safety
 * `t` must be a handle from `antibch_tower_new`, not yet freed.
 */
void antibch_tower_free(struct AntibchTower *t);

/**
 * Construct bch(q, q+1, delta, h) on the tower.
 *
 * # Safety
 * `t` must be a live tower handle and `out` a writable handle slot.
 */
enum AntibchStatus antibch_code_new(const struct AntibchTower *t,
                                    int64_t h,
                                    struct AntibchCode **out);

/**
 * # Safety
 * `c` must be a handle from `antibch_code_new`/`antibch_code_dual`.
 */
void antibch_code_free(struct AntibchCode *c);

/**
 * # Safety
 * `c` must be a live code handle; `out` a writable u64 slot.
 */
enum AntibchStatus antibch_code_dimension(const struct AntibchCode *c, uint64_t *out);

/**
 * # Safety
 * `c` must be a live code handle; `out` a writable u64 slot.
 */
enum AntibchStatus antibch_code_length(const struct AntibchCode *c, uint64_t *out);

/**
 * The dual code as a fresh handle.
 *
 * # Safety
 * `t` and `c` must be live matching handles; `out` a writable slot.
 */
enum AntibchStatus antibch_code_dual(const struct AntibchTower *t,
                                     const struct AntibchCode *c,
                                     struct AntibchCode **out);

/**
 * The code descriptor as JSON:
 * {"q","n","delta","h","dimension","generator","defining_set"}.
 *
 * # Safety
 * `t` and `c` must be live matching handles; `out` a writable slot for a
 * string later released with `antibch_string_free`.
 */
enum AntibchStatus antibch_code_descriptor_json(const struct AntibchTower *t,
                                                const struct AntibchCode *c,
                                                char **out);

/**
 * Weight distribution of the code as a JSON array of decimal strings.
 * `use_trace` nonzero selects the dual trace parameterization (the handle
 * must then be the dual of a narrow-sense code).
 *
 * # Safety
 * `t` and `c` must be live matching handles; `out` as in
 * `antibch_code_descriptor_json`.
 */
enum AntibchStatus antibch_weight_distribution_json(const struct AntibchTower *t,
                                                    const struct AntibchCode *c,
                                                    uint32_t use_trace,
                                                    uint64_t threads,
                                                    char **out);

/**
 * Run a named verification suite (same names as the CLI: params,
 * dual-params, min-words, design, design-iso, p-rank, classification,
 * automorphism, lemmas, scale) and write the JSON report. Returns
 * `ANTIBCH_VERIFICATION_FAILED` when any check fails; the report is
 * still written in that case. Pass `u0 = UINT64_MAX` for the default
 * base point.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `out` as above.
 */
enum AntibchStatus antibch_verify_json(const char *suite,
                                       uint64_t p,
                                       uint64_t m,
                                       uint64_t delta,
                                       uint64_t h,
                                       uint64_t seed,
                                       uint64_t samples,
                                       uint64_t threads,
                                       uint64_t u0,
                                       char **out);

/**
 * The PGL-invariant code classification report as JSON.
 *
 * # Safety
 * `out` as above.
 */
enum AntibchStatus antibch_classification_json(uint64_t p, uint64_t m, uint64_t h, char **out);

/**
 * Release a string produced by any `*_json` function.
 *
 * # Safety
 * `s` must be a string returned by this library, not yet freed.
 */
void antibch_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANTIBCH_H */
