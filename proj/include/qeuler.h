/*
 * qeuler C API.
 *
 * Every function returns a qe_status. On failure a thread-local message is
 * available from qe_last_error() until the next call on the same thread.
 * Exact values cross the boundary as "num/den" strings (just "num" for
 * integers); strings returned through char** are owned by the caller and
 * released with qe_string_free(). Rational inputs use the same syntax.
 */
#ifndef QEULER_H
#define QEULER_H

#include <stddef.h>
#include <stdint.h>

#if defined(QEULER_BUILDING_LIBRARY)
#define QEULER_API __attribute__((visibility("default")))
#else
#define QEULER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qe_status {
  QE_OK = 0,
  QE_ERR_INVALID_ARGUMENT = 1, /* null pointer, malformed rational */
  QE_ERR_DOMAIN = 2,           /* outside the operation's domain */
  QE_ERR_NONCONVERGENCE = 3,   /* max_terms reached; partial value filled in */
  QE_ERR_RESOURCE = 4,         /* size cap exceeded */
  QE_ERR_INTERNAL = 5
} qe_status;

typedef enum qe_method {
  QE_METHOD_DIRECT = 0,
  QE_METHOD_CONTINUATION = 1,
  QE_METHOD_EXACT_NEGATIVE_INTEGER = 2
} qe_method;

typedef struct qe_policy {
  double eps;
  uint64_t max_terms;
  uint32_t consecutive_small;
} qe_policy;

typedef struct qe_series_value {
  double re;
  double im;
  double err;
  uint64_t terms;
  qe_method method;
} qe_series_value;

typedef struct qe_character qe_character;
typedef struct qe_report qe_report;

QEULER_API const char* qe_last_error(void);
QEULER_API const char* qe_status_name(qe_status status);
QEULER_API const char* qe_method_name(qe_method method);
QEULER_API void qe_string_free(char* s);

/* Defaults (eps 1e-12, 10000 terms, 3 consecutive small terms); max_terms
 * honours QEULER_MAX_TERMS. */
QEULER_API qe_status qe_policy_default(qe_policy* out);

/* Rationals. */
QEULER_API qe_status qe_rational_canonical(const char* r, char** out);
QEULER_API qe_status qe_rational_to_double(const char* r, double* out);
/* *infinite is set to 1 for r = 0, in which case *out is untouched. */
QEULER_API qe_status qe_p_valuation(const char* r, uint64_t p, int64_t* out, int* infinite);

/* Closed forms (exact). */
QEULER_API qe_status qe_qeuler_higher_exact(uint32_t m, uint32_t k, const char* q, char** out);
QEULER_API qe_status qe_qeuler_higher_numeric(uint32_t m, uint32_t k, double q, double* out);
QEULER_API qe_status qe_qeuler_mixed_exact(uint32_t kdeg, uint32_t m, const char* q, char** out);
/* E_{m,q}^{(-m,1)}(a/d) at q = r^d. */
QEULER_API qe_status qe_qeuler_poly_exact(uint32_t m, const char* r, uint32_t d, uint32_t a,
                                          char** out);
QEULER_API qe_status qe_qeuler_poly_numeric(uint32_t m, double q, double x, double* out);
QEULER_API qe_status qe_euler_classical(uint32_t n, uint32_t k, char** out);

/* Fermionic integral stage: k-fold stage value at level N for base p, q. */
QEULER_API qe_status qe_integral_stage(uint32_t m, uint32_t k, uint32_t p, const char* q,
                                       uint32_t level, char** out);

/* Exact values at negative integers. */
QEULER_API qe_status qe_zeta_neg_int_exact(uint32_t m, const char* q, char** out);
QEULER_API qe_status qe_hurwitz_neg_int_exact(uint32_t m, const char* r, uint32_t d, uint32_t a,
                                              char** out);
QEULER_API qe_status qe_lseries_neg_int_exact(uint32_t k, const qe_character* chi, const char* r,
                                              char** out);
QEULER_API qe_status qe_lseries_neg_int_value(uint32_t k, const qe_character* chi, const char* r,
                                              double* re, double* im);
QEULER_API qe_status qe_partial_neg_int_exact(uint32_t n, uint32_t a, uint32_t F, const char* r,
                                              char** out);

/* Numeric series. policy may be NULL for qe_policy_default(). */
QEULER_API qe_status qe_zeta(double s_re, double s_im, double q, const qe_policy* policy,
                             qe_series_value* out);
QEULER_API qe_status qe_zeta_direct(double s_re, double s_im, double q, const qe_policy* policy,
                                    qe_series_value* out);
QEULER_API qe_status qe_hurwitz(double s_re, double s_im, double x, double q,
                                const qe_policy* policy, qe_series_value* out);
QEULER_API qe_status qe_hurwitz_direct(double s_re, double s_im, double x, double q,
                                       const qe_policy* policy, qe_series_value* out);
QEULER_API qe_status qe_lseries(double s_re, double s_im, const qe_character* chi, double q,
                                const qe_policy* policy, qe_series_value* out);
QEULER_API qe_status qe_lseries_direct(double s_re, double s_im, const qe_character* chi,
                                       double q, const qe_policy* policy, qe_series_value* out);
QEULER_API qe_status qe_partial(double s_re, double s_im, uint32_t a, uint32_t F, double q,
                                const qe_policy* policy, qe_series_value* out);
QEULER_API qe_status qe_partial_direct(double s_re, double s_im, uint32_t a, uint32_t F,
                                       double q, const qe_policy* policy, qe_series_value* out);

/* Dirichlet characters mod odd d; index follows the enumeration order
 * (lexicographic in character exponents over ascending primes). */
QEULER_API qe_status qe_character_count(uint64_t d, uint64_t* out);
QEULER_API qe_status qe_character_create(uint64_t d, uint64_t index, qe_character** out);
QEULER_API void qe_character_destroy(qe_character* chi);
QEULER_API uint64_t qe_character_modulus(const qe_character* chi);
QEULER_API uint64_t qe_character_order(const qe_character* chi);
QEULER_API uint64_t qe_character_conductor(const qe_character* chi);
QEULER_API int qe_character_is_primitive(const qe_character* chi);
QEULER_API int qe_character_is_real(const qe_character* chi);
/* chi(n) = exp(2 pi i num/den), or *is_zero = 1 when gcd(n, d) > 1. */
QEULER_API qe_status qe_character_eval(const qe_character* chi, int64_t n, int* is_zero,
                                       uint64_t* num, uint64_t* den);

/* Verification suites. suites: comma-separated names or "all"/NULL. */
QEULER_API qe_status qe_verify_run(const char* suites, uint64_t seed, int inject_failure,
                                   qe_report** out);
QEULER_API void qe_report_destroy(qe_report* report);
QEULER_API size_t qe_report_count(const qe_report* report);
QEULER_API int qe_report_all_passed(const qe_report* report);
/* Borrowed strings, valid until qe_report_destroy. */
QEULER_API qe_status qe_report_check(const qe_report* report, size_t i, const char** suite,
                                     const char** name, int* passed, const char** detail);

#ifdef __cplusplus
}
#endif

#endif /* QEULER_H */
