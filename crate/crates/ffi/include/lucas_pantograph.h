#ifndef LUCAS_PANTOGRAPH_H
#define LUCAS_PANTOGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by all functions.
 */
typedef enum LpStatus {
  LP_STATUS_OK = 0,
  LP_STATUS_NULL_POINTER = 1,
  LP_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Parameters outside the domain of the operation (zero s or t,
   * vanishing factors, poles, non-contracting integral nodes).
   */
  LP_STATUS_DOMAIN = 3,
  /**
   * The adaptive series or the integral did not converge.
   */
  LP_STATUS_DIVERGED = 4,
  LP_STATUS_NO_ROOT = 5,
  LP_STATUS_UNKNOWN_IDENTITY = 6,
  /**
   * The suite ran but some identity failed; the report is still returned.
   */
  LP_STATUS_VERIFY_FAILED = 7,
  LP_STATUS_PANIC = 8,
} LpStatus;

/**
 * Opaque handle to a Lucas parameter pair `(s, t)` and its sequence cache.
 */
typedef struct LpParams LpParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a handle for `(s, t)`; both must be non-zero.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle pointer.
 */
enum LpStatus lp_params_new(double s, double t, struct LpParams **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `p` must come from [`lp_params_new`] and not be used afterwards.
 */
void lp_params_free(struct LpParams *p);

/**
 * `{n}` by the recurrence.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum LpStatus lp_lucas_u(const struct LpParams *p, uint32_t n, double *out);

/**
 * `<n>` by the recurrence.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum LpStatus lp_lucas_v(const struct LpParams *p, uint32_t n, double *out);

/**
 * `{n}` by the closed form.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum LpStatus lp_binet(const struct LpParams *p, uint32_t n, double *out);

/**
 * `{n}!`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum LpStatus lp_lucastorial(const struct LpParams *p, uint32_t n, double *out);

/**
 * `{n choose k}`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum LpStatus lp_lucasnomial(const struct LpParams *p, uint32_t n, uint32_t k, double *out);

/**
 * `kind(x, u)` where `kind` is one of `exp sin cos tan cot sec csc sinh
 * cosh tanh coth sech csch`. `terms` may be null.
 *
 * # Safety
 * `p` must be a live handle, `kind` a NUL-terminated string, `out` valid
 * for writes and `terms` null or valid for writes.
 */
enum LpStatus lp_fn_value(const struct LpParams *p,
                          const char *kind,
                          double u,
                          double x,
                          double eps,
                          double *out,
                          size_t *terms);

/**
 * First positive zero of `sin(x, u)` in `(0, x_max]`, with `|sin|` at it.
 * `residual` may be null.
 *
 * # Safety
 * `p` must be a live handle, `out` valid for writes and `residual` null or
 * valid for writes.
 */
enum LpStatus lp_find_pi_u(const struct LpParams *p,
                           double u,
                           double x_max,
                           double *out,
                           double *residual);

/**
 * Lucas integral over `[a, b]` of the polynomial with `len` coefficients,
 * constant first.
 *
 * # Safety
 * `p` must be a live handle, `coeffs` valid for `len` reads and `out`
 * valid for writes.
 */
enum LpStatus lp_lucas_integral_poly(const struct LpParams *p,
                                     const double *coeffs,
                                     size_t len,
                                     double a,
                                     double b,
                                     double eps,
                                     double *out);

/**
 * Run the identity suite on `selection` (`all`, a group, an id, or a
 * comma-separated list) and return the JSON report in `out_json`.
 * Returns [`LpStatus::VerifyFailed`] with a report when an identity fails.
 *
 * # Safety
 * `selection` must be a NUL-terminated string and `out_json` valid for
 * writes. The returned string must be released with [`lp_string_free`].
 */
enum LpStatus lp_verify_json(const char *selection,
                             size_t trials,
                             size_t order,
                             uint64_t seed,
                             char **out_json);

/**
 * Release a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void lp_string_free(char *s);

/**
 * Message of the last failure on this thread, empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *lp_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LUCAS_PANTOGRAPH_H */
