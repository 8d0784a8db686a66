/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef ZHOUVAL_H
#define ZHOUVAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZvStatus {
  ZV_STATUS_OK = 0,
  ZV_STATUS_NULL_POINTER = 1,
  ZV_STATUS_INVALID_UTF8 = 2,
  // Malformed expressions, rationals, weights or problem files.
  ZV_STATUS_INVALID_INPUT = 3,
  // Well-formed input outside the supported class.
  ZV_STATUS_UNSUPPORTED = 4,
  // A numeric run ran out of samples or could not decide.
  ZV_STATUS_BUDGET_EXHAUSTED = 5,
  ZV_STATUS_INTERNAL = 6,
  ZV_STATUS_PANIC = 7,
} ZvStatus;

// Opaque weight `scale * log(sum_j |f_j|^(1/a_j))`.
typedef struct ZvWeight ZvWeight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static string.
const char *zv_version(void);

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread; do not free.
const char *zv_last_error_message(void);

// Releases a string returned through an `out` parameter. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void zv_string_free(char *s);

// Builds a weight in the comma-separated variables `vars`.
//
// `generators` holds `count` polynomial expressions. `exponents` may be
// null, and so may each entry and `scale`; a missing value means 1.
//
// # Safety
// String arguments must be null or nul-terminated; `generators` (and
// `exponents` when given) must point to `count` entries.
enum ZvStatus zv_weight_new(const char *vars,
                            const char *scale,
                            const char *const *generators,
                            const char *const *exponents,
                            size_t count,
                            struct ZvWeight **out);

// Releases a weight. Null is ignored.
//
// # Safety
// `w` must come from [`zv_weight_new`] and not have been freed already.
void zv_weight_free(struct ZvWeight *w);

// Number of variables of a weight.
//
// # Safety
// `w` must be a live weight and `out` writable.
enum ZvStatus zv_weight_dim(const struct ZvWeight *w, size_t *out);

// Relative type of `log|g|` against `phi`, as `"p/q"` or `"inf"`.
//
// # Safety
// `phi` must be a live weight, `g` a nul-terminated string, `out` writable.
enum ZvStatus zv_relative_type(const struct ZvWeight *phi, const char *g, char **out);

// Relative type of the weight `psi` against `phi`.
//
// # Safety
// Both weights must be live and `out` writable.
enum ZvStatus zv_weight_relative_type(const struct ZvWeight *psi,
                                      const struct ZvWeight *phi,
                                      char **out);

// Jumping number of `phi` with multiplier `g` (pass `"1"` for the
// plain threshold).
//
// # Safety
// `phi` must be a live weight, `g` a nul-terminated string, `out` writable.
enum ZvStatus zv_jumping_number(const struct ZvWeight *phi, const char *g, char **out);

// Runs a command-line subcommand (`"sigma"`, `"lct"`, `"interpolate"`, ...)
// on an in-memory problem file and returns the JSON report. `seed` may be
// null.
//
// # Safety
// `command` and `problem_json` must be nul-terminated, `seed` null or
// readable, `out` writable.
enum ZvStatus zv_run(const char *command,
                     const char *problem_json,
                     const uint64_t *seed,
                     char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZHOUVAL_H */
