/* Copyright 2026 The legpi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (see LICENSE or
 * https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
 * modified, or distributed except according to those terms.
 */

/* C interface of liblegpi.
 *
 * Every fallible call returns a legpi_status; on failure legpi_last_error()
 * holds a message for the calling thread until its next failing call.
 * Strings returned through char** are owned by the caller and released with
 * legpi_string_free. Strings returned as const char* from a report list live
 * as long as the list.
 */

#ifndef LEGPI_LEGPI_H_
#define LEGPI_LEGPI_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LEGPI_BUILDING)
#define LEGPI_API __declspec(dllexport)
#else
#define LEGPI_API __declspec(dllimport)
#endif
#else
#define LEGPI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum legpi_status {
  LEGPI_OK = 0,
  LEGPI_ERR_INVALID_ARGUMENT = 1,
  LEGPI_ERR_PARSE = 2,
  LEGPI_ERR_REGION = 3,
  LEGPI_ERR_SINGULAR = 4,
  LEGPI_ERR_INDETERMINATE = 5,
  LEGPI_ERR_NON_TERMINATION = 6,
  LEGPI_ERR_INTERNAL = 7
} legpi_status;

typedef struct legpi_context legpi_context;
typedef struct legpi_report_list legpi_report_list;

LEGPI_API const char* legpi_version(void);
LEGPI_API const char* legpi_status_string(legpi_status status);
LEGPI_API const char* legpi_last_error(void);
LEGPI_API void legpi_string_free(char* s);

/* target_digits >= 1 */
LEGPI_API legpi_status legpi_context_new(long target_digits, legpi_context** out);
LEGPI_API void legpi_context_free(legpi_context* ctx);
LEGPI_API long legpi_context_target_digits(const legpi_context* ctx);
LEGPI_API long legpi_context_working_digits(const legpi_context* ctx);

/* fn is one of lambda, eta, e2, e4, e6, delta, s2 (need tau), F, F2 (need
 * lambda) or j (lambda, or tau through lambda(tau)). Unused inputs may be
 * NULL. Complex inputs are "x", "x+yi", "x-yi" or "yi". */
LEGPI_API legpi_status legpi_eval(const legpi_context* ctx, const char* fn, const char* tau,
                                  const char* lambda, char** out);

/* Decimal strings truncated to `digits` significant digits. */
LEGPI_API legpi_status legpi_pi_reference(long digits, char** out);
LEGPI_API legpi_status legpi_pi_from_identity(int which, long digits, char** out);

/* Writes the coefficients of x^1 .. x^n of lambda, x = e^{pi i tau}; n <= 32. */
LEGPI_API legpi_status legpi_lambda_q_coeffs(int n, int64_t* out);

/* tau = (-b + i sqrt(4ac - b^2)) / 2a and lambda(tau). */
LEGPI_API legpi_status legpi_cm_point(const legpi_context* ctx, long a, long b, long c,
                                      char** tau, char** lambda);

LEGPI_API legpi_status legpi_verify_identity(const legpi_context* ctx, int which,
                                             legpi_report_list** out);
/* Quasi-period relation and the general formula at one CM triple. */
LEGPI_API legpi_status legpi_verify_cm(const legpi_context* ctx, long a, long b, long c,
                                       legpi_report_list** out);
/* Both identities and the three built-in CM triples. */
LEGPI_API legpi_status legpi_verify_all(const legpi_context* ctx, legpi_report_list** out);
/* Period-formula check chosen by where tau lies: Re(tau) = 1 gives the
 * check around 1 plus its discrepancy report; Re(tau) = 0 with Im < 1 the
 * check around 0; anything else the check around infinity. */
LEGPI_API legpi_status legpi_check_theorem(const legpi_context* ctx, const char* tau,
                                           legpi_report_list** out);
/* legpi_verify_cm plus the combined/raw s2 cross-check where defined. */
LEGPI_API legpi_status legpi_cm_report(const legpi_context* ctx, long a, long b, long c,
                                       legpi_report_list** out);
LEGPI_API legpi_status legpi_selftest(const legpi_context* ctx, uint64_t seed,
                                      legpi_report_list** out);

LEGPI_API size_t legpi_report_list_size(const legpi_report_list* list);
LEGPI_API int legpi_report_pass(const legpi_report_list* list, size_t i);
LEGPI_API const char* legpi_report_label(const legpi_report_list* list, size_t i);
LEGPI_API const char* legpi_report_lhs(const legpi_report_list* list, size_t i);
LEGPI_API const char* legpi_report_rhs(const legpi_report_list* list, size_t i);
LEGPI_API const char* legpi_report_abs_error(const legpi_report_list* list, size_t i);
LEGPI_API long legpi_report_digits(const legpi_report_list* list, size_t i);
LEGPI_API size_t legpi_report_flag_count(const legpi_report_list* list, size_t i);
LEGPI_API const char* legpi_report_flag(const legpi_report_list* list, size_t i, size_t j);
/* One-line JSON object with the seven report fields. */
LEGPI_API const char* legpi_report_json(const legpi_report_list* list, size_t i);
LEGPI_API void legpi_report_list_free(legpi_report_list* list);

#ifdef __cplusplus
}
#endif

#endif /* LEGPI_LEGPI_H_ */
