/*
 * C interface to the s-partition library.
 *
 * Every call returns an spart_status. On failure, spart_last_error() gives
 * a message for the calling thread, valid until that thread's next call.
 * Big integers cross the boundary as NUL-terminated decimal strings.
 *
 * Functions that write a string take (buf, cap, needed): *needed receives
 * the length including the terminator. If buf is NULL or cap is too small,
 * nothing is written and SPART_ERR_BUFFER_TOO_SMALL is returned.
 */
#ifndef SPART_SPART_H
#define SPART_SPART_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPART_BUILDING_LIBRARY)
#    define SPART_API __declspec(dllexport)
#  else
#    define SPART_API __declspec(dllimport)
#  endif
#else
#  define SPART_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spart_status {
  SPART_OK = 0,
  SPART_ERR_DOMAIN = 1,
  SPART_ERR_POLE = 2,
  SPART_ERR_ACCURACY = 3,
  SPART_ERR_RESOURCE = 4,
  SPART_ERR_INVALID_ARGUMENT = 5,
  SPART_ERR_BUFFER_TOO_SMALL = 6,
  SPART_ERR_INTERNAL = 7,
  SPART_DONE = 8
} spart_status;

SPART_API const char* spart_last_error(void);
SPART_API const char* spart_status_name(spart_status status);
SPART_API const char* spart_version(void);

/* ---- counting ---------------------------------------------------------- */

typedef enum spart_part_set {
  SPART_PARTS_MERSENNE = 0, /* 2^k - 1, k >= 1 */
  SPART_PARTS_BINARY = 1    /* 2^k, k >= 0 */
} spart_part_set;

typedef struct spart_table spart_table;

SPART_API spart_status spart_table_create(spart_part_set parts, uint64_t n_max, spart_table** out);
SPART_API void spart_table_destroy(spart_table* table);
SPART_API uint64_t spart_table_max_n(const spart_table* table);
SPART_API spart_status spart_table_count(const spart_table* table, uint64_t n, char* buf,
                                         size_t cap, size_t* needed);
/* natural log of counts[n] */
SPART_API spart_status spart_table_log(const spart_table* table, uint64_t n, double* out);
/* sum of counts[0..u-1], u >= 1 */
SPART_API spart_status spart_table_cumulative(const spart_table* table, uint64_t u, char* buf,
                                              size_t cap, size_t* needed);

SPART_API spart_status spart_brute_force_count(uint64_t n, char* buf, size_t cap, size_t* needed);

/* ---- special functions ------------------------------------------------- */

SPART_API spart_status spart_gamma(double re, double im, double* out_re, double* out_im);
SPART_API spart_status spart_zeta(double re, double im, double* out_re, double* out_im);

typedef struct spart_quadrature {
  double value;
  double error_estimate;
  uint64_t evaluations;
} spart_quadrature;

typedef double (*spart_integrand)(double x, void* user);

/* b may be +INFINITY; breakpoints may be NULL when count is 0 */
SPART_API spart_status spart_integrate(spart_integrand f, void* user, double a, double b, double tol,
                                       const double* breakpoints, size_t breakpoint_count,
                                       spart_quadrature* out);

/* ---- asymptotics ------------------------------------------------------- */

typedef struct spart_estimate {
  double value;
  double error;
} spart_estimate;

typedef struct spart_constants {
  spart_estimate alpha;
  spart_estimate c;
  spart_estimate tail_integral;
  spart_estimate H;
} spart_constants;

typedef struct spart_breakdown {
  double quad_term;
  double lin_term;
  double bline_term;
  double w_value;
  double gauss_const;
  double h_const;
  double total;
  double w_argument;
} spart_breakdown;

typedef double (*spart_fourier_fn)(long nu, void* user);

typedef struct spart_params {
  double a;
  double b;
  double c;
  double rho;
  double lambda1;
  double h;
  spart_fourier_fn fourier_c; /* NULL: every coefficient is zero */
  void* fourier_user;
} spart_params;

SPART_API spart_status spart_sawtooth(double x, double* out);
SPART_API spart_status spart_remainder_R(double u, double* out);
SPART_API spart_status spart_eq4_series(double u, int nu_max, double* out);
SPART_API spart_status spart_constants_compute(double tol, spart_constants* out);
SPART_API spart_status spart_w_eval(double z, int nu_max, double* out);
SPART_API double spart_sawtooth_coefficient(long nu, void* user);
SPART_API spart_status spart_mersenne_params(double tol, spart_params* out);
SPART_API spart_status spart_binary_params(spart_params* out);
SPART_API spart_status spart_theorem2(double u, const spart_params* params, double tol, int nu_max,
                                      spart_breakdown* out);
SPART_API spart_status spart_theorem1(uint64_t n, double tol, int nu_max, spart_breakdown* out);

/* ---- Bhatt bound audit ------------------------------------------------- */

SPART_API const char* spart_bhatt_convention(void);
SPART_API spart_status spart_bhatt_bound(uint64_t n, char* buf, size_t cap, size_t* needed);

typedef struct spart_audit spart_audit;

/* Strings point into the scanner and stay valid until the next call on it. */
typedef struct spart_audit_record {
  uint64_t n;
  const char* exact;
  const char* bound;
  int violated;
} spart_audit_record;

typedef struct spart_log_ratio {
  uint64_t n;
  double ratio;
} spart_log_ratio;

typedef struct spart_audit_summary {
  uint64_t n_max;
  uint64_t first_violation; /* 0 when none found */
  uint64_t violations;
  double max_log_ratio;
  uint64_t max_log_ratio_n;
  int bound_monotone_from_16;
  uint64_t first_bound_drop; /* 0 when none */
  spart_log_ratio trend[8];
  size_t trend_count;
  int log_ratio_increasing;
} spart_audit_summary;

SPART_API spart_status spart_audit_create(uint64_t n_max, spart_audit** out);
SPART_API void spart_audit_destroy(spart_audit* audit);
/* SPART_OK with a record, or SPART_DONE after n_max */
SPART_API spart_status spart_audit_next(spart_audit* audit, spart_audit_record* record);
SPART_API spart_status spart_audit_summarize(const spart_audit* audit, spart_audit_summary* out);

/* ---- exponentiation ---------------------------------------------------- */

/* exponents k of the greedy parts 2^k - 1; *count receives the number of parts */
SPART_API spart_status spart_decompose(const char* n, uint32_t* exponents, size_t cap, size_t* count);
/* 2^k - 1 in decimal, k >= 1 */
SPART_API spart_status spart_mersenne_number(uint32_t k, char* buf, size_t cap, size_t* needed);
SPART_API spart_status spart_modexp(const char* a, const char* n, const char* m, char* buf,
                                    size_t cap, size_t* needed);
SPART_API spart_status spart_modexp_reference(const char* a, const char* n, const char* m, char* buf,
                                              size_t cap, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* SPART_SPART_H */
