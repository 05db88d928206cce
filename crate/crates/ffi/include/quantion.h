#ifndef QUANTION_H
#define QUANTION_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define QTN_OK 0

/**
 * The operand lies on the null cone; the requested inverse does not exist.
 */
#define QTN_NULL_DIVISOR 1

/**
 * The operand is not a real (hermitian) quantion.
 */
#define QTN_NOT_HERMITIAN 2

/**
 * A scalar argument or buffer content is out of range or non-finite.
 */
#define QTN_INVALID_ARGUMENT 3

/**
 * A required pointer argument was NULL.
 */
#define QTN_NULL_POINTER 4

/**
 * Causal class codes written by `qtn_zovko_current`.
 */
#define QTN_CLASS_ZERO 0

#define QTN_CLASS_NULL_FUTURE 1

#define QTN_CLASS_TIMELIKE_FUTURE 2

/**
 * Basis selectors for `qtn_table_check`.
 */
#define QTN_BASIS_TETRAD 0

#define QTN_BASIS_QUATERNION 1

#define QTN_BASIS_NULL 2

/**
 * Opaque quantal-algebra handle.
 */
typedef struct QtnAlgebra QtnAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes `p beta q` into `out`.
 *
 * # Safety
 * `p` and `q` must point to 8 readable doubles each; `out` must point to
 * 8 writable doubles.
 */
int32_t qtn_beta_mul(const double *p, const double *q, double *out);

/**
 * Writes the conjugate `q*` into `out`.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out` to 8 writable doubles.
 */
int32_t qtn_star(const double *q, double *out);

/**
 * Writes the adjugate `q#` into `out`.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out` to 8 writable doubles.
 */
int32_t qtn_sharp(const double *q, double *out);

/**
 * Writes the metric norm M(q) as (re, im) into `out`.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out` to 2 writable doubles.
 */
int32_t qtn_met_norm(const double *q, double *out);

/**
 * Writes the algebraic norm A(q) = q* beta q as a four-vector into `out`.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out` to 4 writable doubles.
 */
int32_t qtn_alg_norm(const double *q, double *out);

/**
 * Writes `q^-1` into `out`, or reports `QTN_NULL_DIVISOR` when `q` lies
 * on the null cone.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out` to 8 writable doubles.
 */
int32_t qtn_inverse(const double *q, double *out);

/**
 * Projects a hermitian quantion onto its four-vector, or reports
 * `QTN_NOT_HERMITIAN`.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out` to 4 writable doubles.
 */
int32_t qtn_to_four_vector(const double *q, double *out);

/**
 * Embeds a four-vector as a hermitian quantion.
 *
 * # Safety
 * `p` must point to 4 readable doubles; `out` to 8 writable doubles.
 */
int32_t qtn_from_four_vector(const double *p, double *out);

/**
 * Computes the current j(q) into `out_j` and its causal class
 * (`QTN_CLASS_*`) into `out_class`.
 *
 * # Safety
 * `q` must point to 8 readable doubles; `out_j` to 4 writable doubles;
 * `out_class` to a writable int.
 */
int32_t qtn_zovko_current(const double *q, double *out_j, int32_t *out_class);

/**
 * Recomputes the multiplication table for one basis (`QTN_BASIS_*`) and
 * writes the number of cells disagreeing with the embedded golden copy.
 *
 * # Safety
 * `out_mismatches` must point to a writable unsigned int.
 */
int32_t qtn_table_check(int32_t basis, uint32_t *out_mismatches);

/**
 * Creates a hermitian matrix realization (a = +1). Returns NULL when the
 * dimension is out of range.
 */
struct QtnAlgebra *qtn_algebra_new_hermitian(uint32_t n);

/**
 * Creates a real-symmetric matrix realization (a = -1). Returns NULL when
 * the dimension is out of range.
 */
struct QtnAlgebra *qtn_algebra_new_real_symmetric(uint32_t n);

/**
 * Creates the polynomial Poisson realization (a = 0). Returns NULL when
 * the degree cap is out of range.
 */
struct QtnAlgebra *qtn_algebra_new_poisson(uint32_t degree);

/**
 * Tensor-composes two matrix realizations. Returns NULL when either
 * handle is NULL, not a matrix realization, or the two disagree on the
 * structure parameter.
 *
 * # Safety
 * `left` and `right` must be live handles from this library (or NULL).
 */
struct QtnAlgebra *qtn_algebra_compose(const struct QtnAlgebra *left,
                                       const struct QtnAlgebra *right);

/**
 * Runs the seeded identity suite and hands back the reports as a JSON
 * array (the same shape the CLI emits). On `QTN_OK` the caller owns the
 * string and must release it with `qtn_string_free`. `out_all_pass`
 * receives 1 when every identity passed, 0 otherwise.
 *
 * # Safety
 * `alg` must be a live handle from this library; `out_json` must point
 * to a writable pointer; `out_all_pass` to a writable int.
 */
int32_t qtn_algebra_run_suite(const struct QtnAlgebra *alg,
                              uint64_t samples,
                              uint64_t seed,
                              double tol,
                              char **out_json,
                              int32_t *out_all_pass);

/**
 * Releases a handle. NULL is a no-op.
 *
 * # Safety
 * `alg` must be NULL or a handle not yet freed.
 */
void qtn_algebra_free(struct QtnAlgebra *alg);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void qtn_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUANTION_H */
