#include "expbound/expbound.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "expbound/bounds.hpp"
#include "expbound/chebyshev.hpp"
#include "expbound/dephasing.hpp"
#include "expbound/error.hpp"
#include "expbound/json_io.hpp"
#include "expbound/sequences.hpp"

struct eb_expsum {
  expbound::ExpSum value;
};

struct eb_pulse_sequence {
  expbound::PulseSequence value;
};

struct eb_spectral_density {
  expbound::SpectralDensity value;
};

namespace {

using namespace expbound;

thread_local std::string last_error;

eb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return EB_ERR_INVALID_INPUT;
    case ErrorCode::Unsupported: return EB_ERR_UNSUPPORTED;
    case ErrorCode::Convergence: return EB_ERR_CONVERGENCE;
    case ErrorCode::PrecisionInsufficient: return EB_ERR_PRECISION;
    case ErrorCode::Numeric: return EB_ERR_NUMERIC;
    case ErrorCode::Parse: return EB_ERR_PARSE;
  }
  return EB_ERR_INTERNAL;
}

eb_status fail(eb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Body>
eb_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& error) {
    return fail(to_status(error.code()), error.what());
  } catch (const std::bad_alloc&) {
    return fail(EB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& error) {
    return fail(EB_ERR_INTERNAL, error.what());
  } catch (...) {
    return fail(EB_ERR_INTERNAL, "unknown exception");
  }
}

eb_status null_argument(const char* name) {
  return fail(EB_ERR_NULL_ARGUMENT, std::string("null argument: ") + name);
}

#define EB_REQUIRE(ptr)                          \
  do {                                           \
    if ((ptr) == nullptr) return null_argument(#ptr); \
  } while (0)

eb_status copy_out(const std::vector<double>& values, double* out, size_t capacity, size_t* count) {
  EB_REQUIRE(count);
  *count = values.size();
  if (out == nullptr || capacity < values.size()) {
    return fail(EB_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(capacity) + " values, need " +
                    std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), out);
  return EB_OK;
}

eb_status copy_string(const std::string& text, char** out) {
  EB_REQUIRE(out);
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (buffer == nullptr) return fail(EB_ERR_INTERNAL, "out of memory");
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  *out = buffer;
  return EB_OK;
}

void fill(const VanishingOrder& order, eb_vanishing_report* out) {
  out->order = order.order;
  out->exceeds_cap = order.exceeds_cap ? 1 : 0;
  out->digits_used = order.digits_used;
  out->orders_examined = order.ratios.size();
}

void fill(const ClaimCheck& check, eb_claim_result* out) {
  out->a = check.a;
  out->n = check.n;
  out->achieved_max = check.achieved_max;
  out->argmax = check.argmax;
  out->certification_slack = check.certification_slack;
  out->envelope = check.envelope;
  out->passes = check.passes ? 1 : 0;
}

void fill(const QuadratureResult& result, eb_quad_result* out) {
  out->value = result.value;
  out->error_estimate = result.error_estimate;
  out->subintervals = result.subintervals;
}

eb_status quadrature_call(eb_quad_result* out, const std::function<QuadratureResult()>& body) {
  try {
    fill(body(), out);
    last_error.clear();
    return EB_OK;
  } catch (const ConvergenceError& error) {
    out->value = error.partial_value();
    out->error_estimate = error.achieved_error();
    out->subintervals = 0;
    return fail(EB_ERR_CONVERGENCE, error.what());
  }
}

}  // namespace

extern "C" {

const char* eb_version(void) { return "0.1.0"; }

const char* eb_status_string(eb_status status) {
  switch (status) {
    case EB_OK: return "ok";
    case EB_ERR_INVALID_INPUT: return "invalid input";
    case EB_ERR_UNSUPPORTED: return "unsupported input";
    case EB_ERR_CONVERGENCE: return "convergence failure";
    case EB_ERR_PRECISION: return "precision insufficient";
    case EB_ERR_NUMERIC: return "numeric failure";
    case EB_ERR_PARSE: return "parse error";
    case EB_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case EB_ERR_NULL_ARGUMENT: return "null argument";
    case EB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* eb_last_error_message(void) { return last_error.c_str(); }

void eb_string_free(char* text) { std::free(text); }

eb_status eb_cheb_u(unsigned degree, double x, double* out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = cheb_u(degree, x);
    return EB_OK;
  });
}

eb_status eb_cheb_nodes(unsigned n, double* out, size_t capacity, size_t* count) {
  return guarded([&] { return copy_out(cheb_nodes(n).nodes, out, capacity, count); });
}

eb_status eb_endpoint_identity_residual(const double* coefficients, size_t count, unsigned n,
                                        double* out) {
  EB_REQUIRE(out);
  if (count > 0) EB_REQUIRE(coefficients);
  return guarded([&] {
    *out = endpoint_identity_residual(std::span<const double>(coefficients, count), n);
    return EB_OK;
  });
}

eb_status eb_uhrig_fractions(unsigned n, double* out, size_t capacity, size_t* count) {
  return guarded([&] { return copy_out(uhrig_fractions(n).d, out, capacity, count); });
}

eb_status eb_power_sum_residuals(unsigned n, unsigned digits, double* out, size_t capacity,
                                 size_t* count) {
  return guarded([&] { return copy_out(power_sum_residuals(n, digits), out, capacity, count); });
}

eb_status eb_rescaled_timings(unsigned n, double* out, size_t capacity, size_t* count) {
  return guarded([&] { return copy_out(rescaled_timings(n), out, capacity, count); });
}

eb_status eb_uhrig_sum(unsigned n, eb_expsum** out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_expsum{uhrig_sum(n)};
    return EB_OK;
  });
}

eb_status eb_gap_scaled_sum(double b, eb_expsum** out, unsigned* order) {
  EB_REQUIRE(out);
  return guarded([&] {
    const unsigned n = gap_scaled_order(b);
    *out = new eb_expsum{gap_scaled_sum(b)};
    if (order != nullptr) *order = n;
    return EB_OK;
  });
}

eb_status eb_unit_gap_sum(unsigned n, eb_expsum** out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_expsum{unit_gap_sum(n)};
    return EB_OK;
  });
}

eb_status eb_gap_check(const double* exponents, size_t count, double delta, eb_gap_report* out) {
  EB_REQUIRE(out);
  if (count > 0) EB_REQUIRE(exponents);
  return guarded([&] {
    const GapReport report = gap_check(std::span<const double>(exponents, count), delta);
    out->min_gap = report.min_gap;
    out->min_gap_index = report.min_gap_index;
    out->consecutive_ok = report.consecutive_ok;
    out->linear_growth_ok = report.linear_growth_ok;
    out->satisfied = report.satisfied;
    out->delta = report.delta;
    return EB_OK;
  });
}

eb_status eb_expsum_create(const double* coef_re, const double* coef_im, const double* exp_re,
                           const double* exp_im, size_t count, eb_expsum** out) {
  EB_REQUIRE(out);
  if (count > 0) {
    EB_REQUIRE(coef_re);
    EB_REQUIRE(exp_re);
  }
  return guarded([&] {
    std::vector<Complex> coefficients(count);
    std::vector<Complex> exponents(count);
    for (size_t j = 0; j < count; ++j) {
      coefficients[j] = {coef_re[j], coef_im ? coef_im[j] : 0.0};
      exponents[j] = {exp_re[j], exp_im ? exp_im[j] : 0.0};
    }
    *out = new eb_expsum{ExpSum(std::move(coefficients), std::move(exponents))};
    return EB_OK;
  });
}

void eb_expsum_destroy(eb_expsum* sum) { delete sum; }

size_t eb_expsum_size(const eb_expsum* sum) { return sum ? sum->value.size() : 0; }

eb_status eb_expsum_terms(const eb_expsum* sum, double* coef_re, double* coef_im, double* exp_re,
                          double* exp_im, size_t capacity) {
  EB_REQUIRE(sum);
  const ExpSum& g = sum->value;
  if (capacity < g.size()) {
    return fail(EB_ERR_BUFFER_TOO_SMALL, "term buffers hold fewer than " + std::to_string(g.size()) + " entries");
  }
  for (size_t j = 0; j < g.size(); ++j) {
    if (coef_re) coef_re[j] = g.coefficients()[j].real();
    if (coef_im) coef_im[j] = g.coefficients()[j].imag();
    if (exp_re) exp_re[j] = g.exponents()[j].real();
    if (exp_im) exp_im[j] = g.exponents()[j].imag();
  }
  return EB_OK;
}

eb_status eb_expsum_from_json(const char* json, eb_expsum** out) {
  EB_REQUIRE(json);
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_expsum{expsum_from_json(json)};
    return EB_OK;
  });
}

eb_status eb_expsum_to_json(const eb_expsum* sum, char** out) {
  EB_REQUIRE(sum);
  return guarded([&] { return copy_string(expsum_to_json(sum->value), out); });
}

eb_status eb_evaluate(const eb_expsum* sum, double t, unsigned digits, double* re, double* im) {
  EB_REQUIRE(sum);
  EB_REQUIRE(re);
  EB_REQUIRE(im);
  return guarded([&] {
    const Complex value = evaluate(sum->value, t, digits);
    *re = value.real();
    *im = value.imag();
    return EB_OK;
  });
}

eb_status eb_derivative(const eb_expsum* sum, unsigned m, eb_expsum** out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_expsum{derivative(sum->value, m)};
    return EB_OK;
  });
}

eb_status eb_derivative_sup_bound(const eb_expsum* sum, unsigned m, double* out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    *out = derivative_sup_bound(sum->value, m);
    return EB_OK;
  });
}

eb_status eb_precision_policy_digits(const eb_expsum* sum, unsigned* out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  *out = precision_policy_digits(sum->value);
  return EB_OK;
}

eb_status eb_vanishing_order(const eb_expsum* sum, double t0, double rel_tol, unsigned digits,
                             eb_vanishing_report* out, double* ratios, size_t ratio_capacity) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    const VanishingOrder order = vanishing_order(sum->value, t0, rel_tol, digits);
    fill(order, out);
    if (ratios != nullptr) {
      const size_t n = std::min(ratio_capacity, order.ratios.size());
      std::copy_n(order.ratios.begin(), n, ratios);
    }
    return EB_OK;
  });
}

eb_status eb_sup_norm(const eb_expsum* sum, double y, double a, size_t grid_points,
                      unsigned digits, eb_sup_result* out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    const SupNormResult r = sup_norm(sum->value, Interval(y, a), grid_points, digits);
    *out = {r.max, r.argmax, r.grid_spacing, r.certification_slack, r.grid_points};
    return EB_OK;
  });
}

eb_status eb_l1_norm(const eb_expsum* sum, double y, double a, double abs_tol, unsigned digits,
                     eb_quad_result* out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    return quadrature_call(out, [&] { return l1_norm(sum->value, Interval(y, a), abs_tol, digits); });
  });
}

eb_status eb_class_membership(const eb_expsum* sum, double M, unsigned mu, double delta,
                              eb_class_report* out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    const ClassMembership membership = class_membership(sum->value, ClassParams{M, mu, delta});
    out->member = membership.member ? 1 : 0;
    out->violation_index = membership.violation ? membership.violation->index : 0;
    out->violation = membership.violation
                         ? static_cast<eb_class_condition>(membership.violation->condition)
                         : EB_CLASS_LEADING_MODULUS;
    return EB_OK;
  });
}

eb_status eb_taylor_envelope(unsigned n, double t, double* out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = taylor_envelope(n, t);
    return EB_OK;
  });
}

eb_status eb_taylor_envelope_b(double b, double* out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = taylor_envelope_b(b);
    return EB_OK;
  });
}

eb_status eb_stirling_envelope(double a, double* out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = stirling_envelope(a);
    return EB_OK;
  });
}

eb_status eb_check_taylor_envelope(double a, eb_claim_result* out) {
  EB_REQUIRE(out);
  return guarded([&] {
    fill(check_taylor_envelope(a), out);
    return EB_OK;
  });
}

eb_status eb_check_stirling_envelope(double a, eb_claim_result* out) {
  EB_REQUIRE(out);
  return guarded([&] {
    fill(check_stirling_envelope(a), out);
    return EB_OK;
  });
}

eb_status eb_scaling_fit(const double* a, const double* values, size_t count, eb_fit_result* out) {
  EB_REQUIRE(out);
  if (count > 0) {
    EB_REQUIRE(a);
    EB_REQUIRE(values);
  }
  return guarded([&] {
    std::vector<ScanPoint> points(count);
    for (size_t i = 0; i < count; ++i) points[i] = {a[i], values[i]};
    const ScanResult fit = scaling_fit(points);
    *out = {fit.fit_slope, fit.fit_intercept, fit.r_squared, fit.points.size()};
    return EB_OK;
  });
}

eb_status eb_fit_summary_json(const eb_fit_result* fit, char** out) {
  EB_REQUIRE(fit);
  return guarded([&] {
    ScanResult result;
    result.fit_slope = fit->slope;
    result.fit_intercept = fit->intercept;
    result.r_squared = fit->r_squared;
    result.points.resize(fit->n_points);
    return copy_string(fit_summary_json(result), out);
  });
}

eb_status eb_lower_bound_probe(const eb_expsum* sum, double y, double a, double delta, double M,
                               unsigned mu, eb_probe_result* out) {
  EB_REQUIRE(sum);
  EB_REQUIRE(out);
  return guarded([&] {
    const LowerBoundProbe probe = lower_bound_probe(sum->value, Interval(y, a), ClassParams{M, mu, delta});
    *out = {probe.l1, probe.l1_error, probe.implied_c};
    return EB_OK;
  });
}

eb_status eb_pulse_sequence_create(const double* times, size_t count, eb_pulse_sequence** out) {
  EB_REQUIRE(out);
  if (count > 0) EB_REQUIRE(times);
  return guarded([&] {
    *out = new eb_pulse_sequence{PulseSequence(std::vector<double>(times, times + count))};
    return EB_OK;
  });
}

eb_status eb_uhrig_pulse_times(unsigned n, double total_time, eb_pulse_sequence** out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_pulse_sequence{uhrig_pulse_times(n, total_time)};
    return EB_OK;
  });
}

eb_status eb_cpmg_pulse_times(unsigned n, double total_time, eb_pulse_sequence** out) {
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_pulse_sequence{PulseSequence::cpmg(n, total_time)};
    return EB_OK;
  });
}

void eb_pulse_sequence_destroy(eb_pulse_sequence* sequence) { delete sequence; }

eb_status eb_pulse_sequence_times(const eb_pulse_sequence* sequence, double* out, size_t capacity,
                                  size_t* count) {
  EB_REQUIRE(sequence);
  return copy_out(sequence->value.times(), out, capacity, count);
}

eb_status eb_pulse_sequence_total_time(const eb_pulse_sequence* sequence, double* out) {
  EB_REQUIRE(sequence);
  EB_REQUIRE(out);
  *out = sequence->value.total_time();
  return EB_OK;
}

eb_status eb_min_separation(const eb_pulse_sequence* sequence, double* out) {
  EB_REQUIRE(sequence);
  EB_REQUIRE(out);
  *out = min_separation(sequence->value);
  return EB_OK;
}

eb_status eb_pulse_sequence_from_json(const char* json, eb_pulse_sequence** out) {
  EB_REQUIRE(json);
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_pulse_sequence{pulse_sequence_from_json(json)};
    return EB_OK;
  });
}

eb_status eb_pulse_sequence_to_json(const eb_pulse_sequence* sequence, char** out) {
  EB_REQUIRE(sequence);
  return guarded([&] { return copy_string(pulse_sequence_to_json(sequence->value), out); });
}

eb_status eb_filter_expsum(const eb_pulse_sequence* sequence, eb_expsum** out) {
  EB_REQUIRE(sequence);
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_expsum{filter_expsum(sequence->value)};
    return EB_OK;
  });
}

eb_status eb_filter_function(const eb_pulse_sequence* sequence, double omega, unsigned digits,
                             double* re, double* im) {
  EB_REQUIRE(sequence);
  EB_REQUIRE(re);
  EB_REQUIRE(im);
  return guarded([&] {
    const Complex value = filter_function(sequence->value, omega, digits);
    *re = value.real();
    *im = value.imag();
    return EB_OK;
  });
}

eb_status eb_vanishing_order_filter(const eb_pulse_sequence* sequence, double rel_tol,
                                    unsigned digits, eb_vanishing_report* out) {
  EB_REQUIRE(sequence);
  EB_REQUIRE(out);
  return guarded([&] {
    fill(vanishing_order_filter(sequence->value, rel_tol, digits), out);
    return EB_OK;
  });
}

eb_status eb_density_create(eb_density_kind kind, double amplitude, double cutoff,
                            const double* table_omega, const double* table_value,
                            size_t table_count, eb_spectral_density** out) {
  EB_REQUIRE(out);
  return guarded([&] {
    switch (kind) {
      case EB_DENSITY_HARD_CUTOFF_FLAT:
        *out = new eb_spectral_density{SpectralDensity::flat(amplitude, cutoff)};
        return EB_OK;
      case EB_DENSITY_OHMIC_EXPONENTIAL:
        *out = new eb_spectral_density{SpectralDensity::ohmic(amplitude, cutoff)};
        return EB_OK;
      case EB_DENSITY_TABULATED: {
        if (table_count > 0 && (table_omega == nullptr || table_value == nullptr)) {
          return null_argument("table");
        }
        std::vector<std::pair<double, double>> table(table_count);
        for (size_t i = 0; i < table_count; ++i) table[i] = {table_omega[i], table_value[i]};
        *out = new eb_spectral_density{SpectralDensity::tabulated(std::move(table), amplitude)};
        return EB_OK;
      }
    }
    return fail(EB_ERR_INVALID_INPUT, "unknown density kind");
  });
}

eb_status eb_density_from_json(const char* json, eb_spectral_density** out) {
  EB_REQUIRE(json);
  EB_REQUIRE(out);
  return guarded([&] {
    *out = new eb_spectral_density{spectral_density_from_json(json)};
    return EB_OK;
  });
}

void eb_density_destroy(eb_spectral_density* density) { delete density; }

eb_status eb_density_value(const eb_spectral_density* density, double omega, double* out) {
  EB_REQUIRE(density);
  EB_REQUIRE(out);
  *out = density->value(omega);
  return EB_OK;
}

eb_status eb_decay_factor(const eb_pulse_sequence* sequence, const eb_spectral_density* density,
                          double abs_tol, eb_quad_result* out) {
  EB_REQUIRE(sequence);
  EB_REQUIRE(density);
  EB_REQUIRE(out);
  return guarded([&] {
    return quadrature_call(out, [&] { return decay_factor(sequence->value, density->value, abs_tol); });
  });
}

}  // extern "C"
