/*
 * expbound C API.
 *
 * Every function returns an eb_status. On failure a thread-local message is
 * available from eb_last_error_message() until the next call on the same
 * thread. Handles are opaque; objects returned through an out-pointer are
 * owned by the caller and released with the matching *_destroy function.
 * Strings returned through char** are released with eb_string_free.
 *
 * Array outputs follow one convention: the caller passes a buffer and its
 * capacity, the library writes the required length to *count. When the
 * buffer is NULL or too small, nothing is written to it and
 * EB_ERR_BUFFER_TOO_SMALL is returned (with *count still set).
 */
#ifndef EXPBOUND_H
#define EXPBOUND_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EXPBOUND_BUILDING_LIBRARY)
#    define EB_API __declspec(dllexport)
#  else
#    define EB_API __declspec(dllimport)
#  endif
#else
#  define EB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eb_status {
  EB_OK = 0,
  EB_ERR_INVALID_INPUT = 1,
  EB_ERR_UNSUPPORTED = 2,
  EB_ERR_CONVERGENCE = 3,
  EB_ERR_PRECISION = 4,
  EB_ERR_NUMERIC = 5,
  EB_ERR_PARSE = 6,
  EB_ERR_BUFFER_TOO_SMALL = 7,
  EB_ERR_NULL_ARGUMENT = 8,
  EB_ERR_INTERNAL = 9
} eb_status;

typedef struct eb_expsum eb_expsum;
typedef struct eb_pulse_sequence eb_pulse_sequence;
typedef struct eb_spectral_density eb_spectral_density;

EB_API const char* eb_version(void);
EB_API const char* eb_status_string(eb_status status);
EB_API const char* eb_last_error_message(void);
EB_API void eb_string_free(char* text);

/* ---- Chebyshev polynomials of the second kind ---- */

EB_API eb_status eb_cheb_u(unsigned degree, double x, double* out);
/* 2n+1 nodes cos(k pi/(2n+2)), k = 1..2n+1; n must be even. */
EB_API eb_status eb_cheb_nodes(unsigned n, double* out, size_t capacity, size_t* count);
/* coefficients[i] multiplies x^i; the polynomial must be even with degree <= 2n. */
EB_API eb_status eb_endpoint_identity_residual(const double* coefficients, size_t count,
                                               unsigned n, double* out);

/* ---- constructions ---- */

EB_API eb_status eb_uhrig_fractions(unsigned n, double* out, size_t capacity, size_t* count);
EB_API eb_status eb_power_sum_residuals(unsigned n, unsigned digits, double* out, size_t capacity,
                                        size_t* count);
EB_API eb_status eb_rescaled_timings(unsigned n, double* out, size_t capacity, size_t* count);
EB_API eb_status eb_uhrig_sum(unsigned n, eb_expsum** out);
EB_API eb_status eb_gap_scaled_sum(double b, eb_expsum** out, unsigned* order);
EB_API eb_status eb_unit_gap_sum(unsigned n, eb_expsum** out);

typedef struct eb_gap_report {
  double min_gap;
  size_t min_gap_index;
  int consecutive_ok;
  int linear_growth_ok;
  int satisfied;
  double delta;
} eb_gap_report;

EB_API eb_status eb_gap_check(const double* exponents, size_t count, double delta,
                              eb_gap_report* out);

/* ---- exponential sums ---- */

/* coef_im and exp_im may be NULL (all zero). */
EB_API eb_status eb_expsum_create(const double* coef_re, const double* coef_im,
                                  const double* exp_re, const double* exp_im, size_t count,
                                  eb_expsum** out);
EB_API void eb_expsum_destroy(eb_expsum* sum);
EB_API size_t eb_expsum_size(const eb_expsum* sum);
/* Any of the four output arrays may be NULL; each needs room for eb_expsum_size terms. */
EB_API eb_status eb_expsum_terms(const eb_expsum* sum, double* coef_re, double* coef_im,
                                 double* exp_re, double* exp_im, size_t capacity);
EB_API eb_status eb_expsum_from_json(const char* json, eb_expsum** out);
EB_API eb_status eb_expsum_to_json(const eb_expsum* sum, char** out);

/* digits == 0: double precision; otherwise MPFR with that many decimal digits. */
EB_API eb_status eb_evaluate(const eb_expsum* sum, double t, unsigned digits, double* re,
                             double* im);
EB_API eb_status eb_derivative(const eb_expsum* sum, unsigned m, eb_expsum** out);
EB_API eb_status eb_derivative_sup_bound(const eb_expsum* sum, unsigned m, double* out);
EB_API eb_status eb_precision_policy_digits(const eb_expsum* sum, unsigned* out);

typedef struct eb_vanishing_report {
  unsigned order;
  int exceeds_cap;
  unsigned digits_used;
  size_t orders_examined;
} eb_vanishing_report;

/* ratios (optional, may be NULL) receives |g^(m)(t0)|/bound_m for m = 0..orders_examined-1,
   truncated to ratio_capacity. */
EB_API eb_status eb_vanishing_order(const eb_expsum* sum, double t0, double rel_tol,
                                    unsigned digits, eb_vanishing_report* out, double* ratios,
                                    size_t ratio_capacity);

typedef struct eb_sup_result {
  double max;
  double argmax;
  double grid_spacing;
  double certification_slack;
  size_t grid_points;
} eb_sup_result;

/* grid_points == 0 selects the default grid. */
EB_API eb_status eb_sup_norm(const eb_expsum* sum, double y, double a, size_t grid_points,
                             unsigned digits, eb_sup_result* out);

typedef struct eb_quad_result {
  double value;
  double error_estimate;
  size_t subintervals;
} eb_quad_result;

/* On EB_ERR_CONVERGENCE, *out holds the partial value and achieved error. */
EB_API eb_status eb_l1_norm(const eb_expsum* sum, double y, double a, double abs_tol,
                            unsigned digits, eb_quad_result* out);

typedef enum eb_class_condition {
  EB_CLASS_LEADING_MODULUS = 0,
  EB_CLASS_LEADING_EXPONENT = 1,
  EB_CLASS_COEFFICIENT_GROWTH = 2,
  EB_CLASS_EXPONENT_GROWTH = 3
} eb_class_condition;

typedef struct eb_class_report {
  int member;
  size_t violation_index;
  eb_class_condition violation;
} eb_class_report;

EB_API eb_status eb_class_membership(const eb_expsum* sum, double M, unsigned mu, double delta,
                                     eb_class_report* out);

/* ---- envelopes and scans ---- */

EB_API eb_status eb_taylor_envelope(unsigned n, double t, double* out);
EB_API eb_status eb_taylor_envelope_b(double b, double* out);
EB_API eb_status eb_stirling_envelope(double a, double* out);

typedef struct eb_claim_result {
  double a;
  unsigned n;
  double achieved_max;
  double argmax;
  double certification_slack;
  double envelope;
  int passes;
} eb_claim_result;

EB_API eb_status eb_check_taylor_envelope(double a, eb_claim_result* out);
EB_API eb_status eb_check_stirling_envelope(double a, eb_claim_result* out);

typedef struct eb_fit_result {
  double slope;
  double intercept;
  double r_squared;
  size_t n_points;
} eb_fit_result;

EB_API eb_status eb_scaling_fit(const double* a, const double* values, size_t count,
                                eb_fit_result* out);
/* Writes {"c_est":...,"intercept":...,"r2":...,"n_points":...}. */
EB_API eb_status eb_fit_summary_json(const eb_fit_result* fit, char** out);

typedef struct eb_probe_result {
  double l1;
  double l1_error;
  double implied_c;
} eb_probe_result;

EB_API eb_status eb_lower_bound_probe(const eb_expsum* sum, double y, double a, double delta,
                                      double M, unsigned mu, eb_probe_result* out);

/* ---- pulse sequences and dephasing ---- */

/* times must include t_0 = 0 and t_{n+1} = T. */
EB_API eb_status eb_pulse_sequence_create(const double* times, size_t count,
                                          eb_pulse_sequence** out);
EB_API eb_status eb_uhrig_pulse_times(unsigned n, double total_time, eb_pulse_sequence** out);
EB_API eb_status eb_cpmg_pulse_times(unsigned n, double total_time, eb_pulse_sequence** out);
EB_API void eb_pulse_sequence_destroy(eb_pulse_sequence* sequence);
EB_API eb_status eb_pulse_sequence_times(const eb_pulse_sequence* sequence, double* out,
                                         size_t capacity, size_t* count);
EB_API eb_status eb_pulse_sequence_total_time(const eb_pulse_sequence* sequence, double* out);
EB_API eb_status eb_min_separation(const eb_pulse_sequence* sequence, double* out);
EB_API eb_status eb_pulse_sequence_from_json(const char* json, eb_pulse_sequence** out);
EB_API eb_status eb_pulse_sequence_to_json(const eb_pulse_sequence* sequence, char** out);
EB_API eb_status eb_filter_expsum(const eb_pulse_sequence* sequence, eb_expsum** out);

EB_API eb_status eb_filter_function(const eb_pulse_sequence* sequence, double omega,
                                    unsigned digits, double* re, double* im);
EB_API eb_status eb_vanishing_order_filter(const eb_pulse_sequence* sequence, double rel_tol,
                                           unsigned digits, eb_vanishing_report* out);

typedef enum eb_density_kind {
  EB_DENSITY_HARD_CUTOFF_FLAT = 0,
  EB_DENSITY_OHMIC_EXPONENTIAL = 1,
  EB_DENSITY_TABULATED = 2
} eb_density_kind;

/* table_omega/table_value are used only for EB_DENSITY_TABULATED (cutoff is then ignored). */
EB_API eb_status eb_density_create(eb_density_kind kind, double amplitude, double cutoff,
                                   const double* table_omega, const double* table_value,
                                   size_t table_count, eb_spectral_density** out);
EB_API eb_status eb_density_from_json(const char* json, eb_spectral_density** out);
EB_API void eb_density_destroy(eb_spectral_density* density);
EB_API eb_status eb_density_value(const eb_spectral_density* density, double omega, double* out);

EB_API eb_status eb_decay_factor(const eb_pulse_sequence* sequence,
                                 const eb_spectral_density* density, double abs_tol,
                                 eb_quad_result* out);

#ifdef __cplusplus
}
#endif

#endif
