#ifndef LDEND_H
#define LDEND_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LdendStatus {
  LDEND_STATUS_OK = 0,
  /**
   * The call succeeded and the mathematical check it ran failed.
   */
  LDEND_STATUS_CHECK_FAILED = 1,
  LDEND_STATUS_NULL_ARGUMENT = 2,
  LDEND_STATUS_INVALID_UTF8 = 3,
  LDEND_STATUS_MALFORMED = 4,
  LDEND_STATUS_DIMENSION = 5,
  LDEND_STATUS_UNKNOWN = 6,
  LDEND_STATUS_PRECONDITION = 7,
  LDEND_STATUS_SINGULAR = 8,
  LDEND_STATUS_SYMMETRY = 9,
  LDEND_STATUS_SEARCH_TOO_LARGE = 10,
  LDEND_STATUS_INTERNAL = 11,
} LdendStatus;

typedef struct LdendAlgebra LdendAlgebra;

typedef struct LdendMap LdendMap;

typedef struct LdendTensor2 LdendTensor2;

typedef struct LdendTensor3 LdendTensor3;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library; valid until the next call.
 */
const char *ldend_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ldend_string_free(char *s);

/**
 * Parse an algebra file's contents.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LdendStatus ldend_algebra_from_json(const char *json, struct LdendAlgebra **out);

/**
 * Canonical JSON of an algebra; free with [`ldend_string_free`].
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum LdendStatus ldend_algebra_to_json(const struct LdendAlgebra *alg, char **out);

/**
 * Dimension of the algebra, 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t ldend_algebra_dim(const struct LdendAlgebra *alg);

/**
 * # Safety
 * `alg` must be null or a handle from this library, not yet freed.
 */
void ldend_algebra_free(struct LdendAlgebra *alg);

/**
 * Parse a map file's contents.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LdendStatus ldend_map_from_json(const char *json, struct LdendMap **out);

/**
 * # Safety
 * `map` must be null or a handle from this library, not yet freed.
 */
void ldend_map_free(struct LdendMap *map);

/**
 * Parse a two-tensor file's contents.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LdendStatus ldend_tensor2_from_json(const char *json, struct LdendTensor2 **out);

/**
 * # Safety
 * `t` must be null or a handle from this library, not yet freed.
 */
void ldend_tensor2_free(struct LdendTensor2 *t);

/**
 * Canonical JSON of a residual; free with [`ldend_string_free`].
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LdendStatus ldend_tensor3_to_json(const struct LdendTensor3 *t, char **out);

/**
 * Number of nonzero entries.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t ldend_tensor3_support(const struct LdendTensor3 *t);

/**
 * # Safety
 * `t` must be null or a handle from this library, not yet freed.
 */
void ldend_tensor3_free(struct LdendTensor3 *t);

/**
 * Check the axioms of `class` (e.g. "pre_lie"). Returns `LDEND_STATUS_OK` or
 * `LDEND_STATUS_CHECK_FAILED`; when `report` is non-null it receives the JSON
 * report.
 *
 * # Safety
 * `alg` must be a live handle; `class` a NUL-terminated string; `report`
 * null or writable.
 */
enum LdendStatus ldend_check_class(const struct LdendAlgebra *alg,
                                   const char *class_,
                                   char **report);

/**
 * Apply a functor by name ("vertical", "quadri:succ_prec", ...). The input
 * class is not checked.
 *
 * # Safety
 * `alg` must be a live handle; `functor` a NUL-terminated string; `out`
 * writable.
 */
enum LdendStatus ldend_derive(const struct LdendAlgebra *alg,
                              const char *functor,
                              struct LdendAlgebra **out);

/**
 * Residual of a tensor equation ("eq-2.9", "eq-4.8", ...).
 *
 * # Safety
 * `alg` and `r` must be live handles; `equation` a NUL-terminated string;
 * `out` writable.
 */
enum LdendStatus ldend_residual(const struct LdendAlgebra *alg,
                                const struct LdendTensor2 *r,
                                const char *equation,
                                struct LdendTensor3 **out);

/**
 * Check that `map` is a Rota-Baxter operator of weight zero on `alg`.
 *
 * # Safety
 * `map` and `alg` must be live handles; `report` null or writable.
 */
enum LdendStatus ldend_check_rota_baxter(const struct LdendMap *map,
                                         const struct LdendAlgebra *alg,
                                         char **report);

/**
 * L-dendriform algebra induced by a Rota-Baxter operator. Fails with
 * `LDEND_STATUS_PRECONDITION` when `map` is not one.
 *
 * # Safety
 * `map` and `alg` must be live handles; `out` writable.
 */
enum LdendStatus ldend_induce_from_rota_baxter(const struct LdendMap *map,
                                               const struct LdendAlgebra *alg,
                                               struct LdendAlgebra **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LDEND_H */
